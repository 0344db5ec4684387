#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "triwalk/lattice.hpp"
#include "triwalk/motzkin.hpp"
#include "triwalk/profiles.hpp"
#include "triwalk/report.hpp"

namespace triwalk {

struct ScaffoldInput {
    Cell cell;
    MotzkinStep step;
    friend bool operator==(const ScaffoldInput&, const ScaffoldInput&) = default;
    friend auto operator<=>(const ScaffoldInput&, const ScaffoldInput&) = default;
};

/// Forward step index j in 1..3 and the cell of z + s_j.
struct ScaffoldOutput {
    int j = 1;
    Cell cell;
    friend bool operator==(const ScaffoldOutput&, const ScaffoldOutput&) = default;
    friend auto operator<=>(const ScaffoldOutput&, const ScaffoldOutput&) = default;
};

std::vector<MotzkinStep> allowed_steps(int f, int L);

/// A(z): every (cell, step) with the step allowed from the cell's floor, in
/// (cell, U<F<D) order.
std::vector<ScaffoldInput> scaffold_domain(const LatticePoint& z);

/// C_1(z+s_1) u C_2(z+s_2) u C_3(z+s_3), ordered by (j, cell).
std::vector<ScaffoldOutput> scaffold_codomain(const LatticePoint& z);

/// Per-point bijections delta_z : A(z) -> C_1(z+s_1) u C_2(z+s_2) u C_3(z+s_3).
class Scaffolding2D {
public:
    virtual ~Scaffolding2D() = default;
    virtual int side() const = 0;
    /// Throws NotAllowed when (c, s) is not in A(z).
    virtual ScaffoldOutput delta(const LatticePoint& z, const Cell& c, MotzkinStep s) const = 0;
    /// Preimage of (s_j, c) under delta_z. Throws NotInImage.
    virtual ScaffoldInput inverse(const LatticePoint& z, const ScaffoldOutput& out) const = 0;
};

/// Materialised tables; used for random scaffoldings and JSON files.
class TableScaffolding final : public Scaffolding2D {
public:
    explicit TableScaffolding(int L);

    int side() const override { return L_; }
    ScaffoldOutput delta(const LatticePoint& z, const Cell& c, MotzkinStep s) const override;
    ScaffoldInput inverse(const LatticePoint& z, const ScaffoldOutput& out) const override;

    /// Adds or replaces one record of delta_z.
    void set(const LatticePoint& z, const ScaffoldInput& in, const ScaffoldOutput& out);
    const std::map<ScaffoldInput, ScaffoldOutput>& table(const LatticePoint& z) const;

    nlohmann::json to_json() const;
    /// Throws ParseError on malformed documents; does not validate bijectivity.
    static TableScaffolding from_json(const nlohmann::json& doc);

private:
    const std::map<ScaffoldInput, ScaffoldOutput>* find(const LatticePoint& z) const;

    int L_;
    std::map<LatticePoint, std::map<ScaffoldInput, ScaffoldOutput>> forward_;
    std::map<LatticePoint, std::map<ScaffoldOutput, ScaffoldInput>> backward_;
};

/// Uniformly random per-height matchings, reproducible from the seed.
TableScaffolding build_random_scaffolding(int L, std::uint64_t seed);

/// The twelve trapezium cases; `case_id` is 1..12.
struct TrapeziumRule {
    int case_id;
    ScaffoldOutput out;
};

/// Rule evaluation from (x1, x2, f, l, s) alone; no triangle bound involved.
TrapeziumRule trapezium_rule(int x1, int x2, const Cell& c, MotzkinStep s);

/// Rule evaluation with the domain check at z. Throws NotAllowed.
TrapeziumRule trapezium_delta(const LatticePoint& z, const Cell& c, MotzkinStep s);

class TrapeziumScaffolding final : public Scaffolding2D {
public:
    explicit TrapeziumScaffolding(int L) : L_(L) {}
    int side() const override { return L_; }
    ScaffoldOutput delta(const LatticePoint& z, const Cell& c, MotzkinStep s) const override;
    ScaffoldInput inverse(const LatticePoint& z, const ScaffoldOutput& out) const override;

private:
    int L_;
};

/// Trapezium image of a Motzkin path without a triangle bound: step indices
/// and the smallest L whose triangle contains the walk from the origin.
struct UnboundedImage {
    std::vector<int> steps;
    int minimal_side = 0;
};
UnboundedImage trapezium_unbounded(const MotzkinWord& m);

/// Number of scaffolding lookups performed by the transducers.
struct LookupStats {
    std::size_t lookups = 0;
};

/// Motzkin path to forward path from O. Throws NotAPath or AmplitudeExceeded.
LatticePath motzkin_to_triangular(const Scaffolding2D& s, const MotzkinWord& m, LookupStats* stats = nullptr);

/// Forward path from O to Motzkin path. Throws NotInImage for paths that are not forward from O.
MotzkinWord triangular_to_motzkin(const Scaffolding2D& s, const LatticePath& p, LookupStats* stats = nullptr);

/// delta-bar_z(c, s) = (-s_{4-j}, c') where delta_{z'}(c, s) = (s_j, c'), z' = z with x1, x2 swapped.
/// The result's j names the backward step -s_j.
ScaffoldOutput reverse_delta(const Scaffolding2D& s, const LatticePoint& z, const Cell& c, MotzkinStep step);
ScaffoldInput reverse_inverse(const Scaffolding2D& s, const LatticePoint& z, const ScaffoldOutput& out);

/// Colours to orientations (black -> F, white -> B), motzkin_to_triangular, then the
/// direction-vector transform.
LatticePath bicolored_method_one(const Scaffolding2D& s, const MotzkinWord& m);
MotzkinWord bicolored_method_one_inverse(const Scaffolding2D& s, const LatticePath& p);

/// One pass using delta for black steps and delta-bar for white steps.
LatticePath bicolored_method_two(const Scaffolding2D& s, const MotzkinWord& m, LookupStats* stats = nullptr);
MotzkinWord bicolored_method_two_inverse(const Scaffolding2D& s, const LatticePath& p,
                                         LookupStats* stats = nullptr);

struct ScaffoldViolation {
    LatticePoint point;
    std::string input;
    std::string message;
};

struct ScaffoldReport {
    std::size_t checked = 0;
    std::vector<ScaffoldViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Domain coverage, height constraint, membership, bijectivity and inverse
/// consistency at every point of T_L.
ScaffoldReport validate_scaffolding(const Scaffolding2D& s);

/// Uniform forward path of length n from O, choosing scaffolding cells on the fly.
LatticePath sample_forward_path(int L, std::size_t n, std::uint64_t seed);
LatticePath sample_forward_path(const MeanderTable& table, Rng& rng);

std::string to_string(const Cell& c);
std::string to_string(const ScaffoldInput& in);

}  // namespace triwalk
