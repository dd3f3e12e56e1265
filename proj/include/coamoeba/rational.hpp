#ifndef COAMOEBA_RATIONAL_HPP
#define COAMOEBA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace coamoeba {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace coamoeba

#endif
