#ifndef COAMOEBA_AINFINITY_HPP
#define COAMOEBA_AINFINITY_HPP

#include <map>
#include <string>
#include <vector>

#include "coamoeba/linalg.hpp"
#include "coamoeba/rational.hpp"

#include "json.hpp"

namespace coamoeba {

/// Finite-dimensional Z-graded space with a named basis.
struct GradedSpace {
    std::vector<std::pair<std::string, int>> basis;  // (name, degree), names unique

    std::size_t dim() const { return basis.size(); }
    std::size_t dim_in_degree(int d) const
    {
        std::size_t n = 0;
        for (const auto& [name, deg] : basis)
            if (deg == d)
                ++n;
        return n;
    }
};

/// Formal rational combination of basis morphisms, keyed by morphism id.
using LinComb = std::map<int, Rational>;

inline void add_scaled(LinComb& into, const LinComb& src, const Rational& c)
{
    if (c == 0)
        return;
    for (const auto& [id, v] : src) {
        Rational& slot = into[id];
        slot += c * v;
        if (slot == 0)
            into.erase(id);
    }
}

/**
 * Finite directed A-infinity category with sparse structure constants.
 *
 * Morphisms are interned; operation keys list input morphism ids in
 * application order (first-composed first, i.e. the reverse of the tuple
 * notation m_l(a_l, ..., a_1)).  Absent keys are zero.  Every object carries
 * a strict unit with m_2(a, id) = a and m_2(id, a) = (-1)^{deg a} a.
 */
class AInfCategory {
public:
    struct Morphism {
        int src, dst;
        std::string name;
        int degree;
        bool unit;
    };

    struct Violation {
        std::vector<int> inputs;  // application order
        LinComb residue;
    };

    int add_object(const std::string& id);
    int add_morphism(const std::string& src_id, const std::string& dst_id,
                     const std::string& name, int degree);
    void add_structure_constant(const std::vector<int>& inputs_app_order, int output,
                                const Rational& coeff);

    std::size_t object_count() const { return objects_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    int object_index(const std::string& id) const;
    bool has_object(const std::string& id) const;

    const Morphism& morphism(int id) const { return mors_[id]; }
    std::size_t morphism_count() const { return mors_.size(); }
    int morphism_index(int src, int dst, const std::string& name) const;
    int unit(int obj) const { return units_[obj]; }

    /// Basis morphism ids of hom(src, dst), in insertion order.
    const std::vector<int>& hom(int src, int dst) const;
    GradedSpace hom_space(int src, int dst) const;

    /// Structure constants of one operation, or nullptr when zero.
    const LinComb* op(const std::vector<int>& inputs_app_order) const;
    const std::map<std::vector<int>, LinComb>& ops() const { return ops_; }
    int max_arity() const { return max_arity_; }

    /// Multilinear evaluation of m_d on combinations (application order).
    LinComb evaluate(const std::vector<LinComb>& inputs_app_order) const;

    /**
     * Evaluates the defining coherence relations on every basis tuple of
     * length at most max_arity and reports the tuples with nonzero residue.
     */
    std::vector<Violation> check_a_infinity(int max_arity) const;

    nlohmann::ordered_json to_json() const;

private:
    std::vector<std::string> objects_;
    std::map<std::string, int> object_index_;
    std::vector<int> units_;
    std::vector<Morphism> mors_;
    std::map<std::tuple<int, int, std::string>, int> mor_index_;
    std::map<std::pair<int, int>, std::vector<int>> homs_;
    std::map<std::vector<int>, LinComb> ops_;
    int max_arity_ = 0;
};

/// Restriction to a total order: units on the diagonal, zero below.
AInfCategory directed_subcategory(const AInfCategory& cat,
                                  const std::vector<std::string>& order);

/**
 * Cohomological category: per-pair, per-degree m_1-cohomology together with
 * the composition induced by m_2 on canonical representatives.
 *
 * Representatives are vectors over the degree-d slice of the hom basis
 * (morphisms of hom(src, dst) with that degree, in hom order).
 */
class CohomologicalCategory {
public:
    explicit CohomologicalCategory(const AInfCategory& cat);

    const AInfCategory& base() const { return base_; }
    const std::map<int, SubquotientBasis>& hom(int src, int dst) const;

    /**
     * Induced composition of class j of hom(mid, dst) at degree d2 after
     * class i of hom(src, mid) at degree d1; coefficients over the classes
     * of hom(src, dst) at degree d1 + d2.  Throws InducedProductIllDefined
     * when the product fails to land in span(classes) + exact part.
     */
    std::vector<Rational> compose(int src, int mid, int dst, int d1, std::size_t i, int d2,
                                  std::size_t j) const;

    /// Morphism ids of hom(src, dst) in a fixed degree, in hom order.
    std::vector<int> degree_slice(int src, int dst, int degree) const;

private:
    AInfCategory base_;
    std::map<std::pair<int, int>, std::map<int, SubquotientBasis>> homs_;
};

CohomologicalCategory cohomological_category(const AInfCategory& cat);

std::string morphism_label(const AInfCategory& cat, int mor);
std::string lincomb_label(const AInfCategory& cat, const LinComb& v);

}  // namespace coamoeba

#endif
