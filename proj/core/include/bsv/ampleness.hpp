#pragma once

// Divisor classes on the three blow-up stages, their degrees on the listed
// curve classes, and the resulting ampleness regions.
//
// Divisors are combinations of omega (the dual of the relative dualizing
// sheaf), E1, E2, E3. Curve names follow the fixture: d_u, l_vw, c_u, f2_u,
// e_u, f_u; at stages 2 and 3 they denote proper transforms.

#include "bsv/fixtures.hpp"
#include "bsv/poly.hpp"
#include "bsv/scalars.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bsv::ampleness {

inline constexpr std::array<char const*, 4> kDivisorSymbols{"omega", "E1", "E2", "E3"};

class DivisorClass {
public:
    DivisorClass() = default;
    static DivisorClass symbol(std::string_view name);

    BigRational const& coefficient(std::size_t i) const { return coeffs_.at(i); }
    BigRational coefficient(std::string_view name) const;

    DivisorClass& operator+=(DivisorClass const& o);
    DivisorClass& operator-=(DivisorClass const& o);
    friend DivisorClass operator+(DivisorClass a, DivisorClass const& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, DivisorClass const& b) { return a -= b; }
    friend DivisorClass operator*(BigRational const& c, DivisorClass d);
    friend bool operator==(DivisorClass const& a, DivisorClass const& b) { return a.coeffs_ == b.coeffs_; }

    bool is_zero() const;

private:
    std::array<BigRational, 4> coeffs_{};
};

std::string to_string(DivisorClass const& d);

struct CurveClass {
    std::string name;
    int stage = 0;
};

/// Intersection numbers, validated on construction: each stage has the
/// divisors omega, E1..E_stage and the same curve columns in every row.
class IntersectionData {
public:
    explicit IntersectionData(IntersectionTable table);

    std::vector<CurveClass> curves(int stage) const;
    /// Throws Error when D involves a divisor without a row at C's stage, or
    /// when C is unknown.
    BigRational pairing(DivisorClass const& d, CurveClass const& c) const;
    long number(int stage, std::string const& divisor, std::string const& curve) const;

private:
    IntersectionTable table_;
};

struct AmpleParams {
    BigRational alpha;
    BigRational beta;
    BigRational gamma;
};

/// α·omega − E1, then β(·) − E2, then γ(·) − E3.
DivisorClass stage_divisor(int stage, AmpleParams const& p);

struct CurveDegree {
    std::string curve;
    BigRational degree;
};

struct AmpleResult {
    int stage = 0;
    std::vector<CurveDegree> degrees;
    std::vector<std::string> vanishing;  // curves of degree exactly 0
    bool ample = false;
};

/// Ample iff the degree is strictly positive on every curve of the stage.
AmpleResult is_ample(IntersectionData const& data, int stage, AmpleParams const& p);
AmpleResult degrees_of(IntersectionData const& data, int stage, DivisorClass const& d);

/// The displayed condition lhs > rhs, its positive clearing factor, and the
/// cleared polynomial condition P > 0 in variables a b g.
struct DisplayedInequality {
    std::string text;
    std::string cleared_by;
    MultiPoly cleared;
    std::function<BigRational(BigRational const&, BigRational const&, BigRational const&)> difference;
    std::function<BigRational(BigRational const&, BigRational const&, BigRational const&)> factor;
};

VarTablePtr parameter_table();  // a b g
std::vector<DisplayedInequality> displayed_inequalities(int stage);

enum class Relation { matches, implied, vacuous, unmatched };
std::string to_string(Relation r);

struct CurveCondition {
    std::string curve;
    MultiPoly degree;                 // in a b g
    Relation relation = Relation::unmatched;
    std::optional<std::size_t> displayed;  // index into displayed_inequalities
    std::string normalized;           // "P > 0" after dividing out the positive monomial
};

struct RegionCertificate {
    int stage = 0;
    std::vector<CurveCondition> curves;
    std::vector<bool> displayed_covered;  // each displayed inequality is matched by some curve
    bool clearing_ok = false;             // cleared == factor·difference on the sample grid

    bool ok() const;
};

RegionCertificate region_equivalence_certificate(IntersectionData const& data, int stage);

struct TwistResult {
    BigRational alpha, beta;
    bool admissible = false;
    std::string precondition;  // the violated inequality when not admissible
    BigRational gamma, m;
    std::vector<CurveDegree> degrees;
    std::vector<std::string> zero_curves;

    /// Zero exactly on d_u and l_vw, positive elsewhere.
    bool pattern_ok() const;
};

TwistResult contraction_twist_certificate(IntersectionData const& data, BigRational const& alpha, BigRational const& beta);

} // namespace bsv::ampleness
