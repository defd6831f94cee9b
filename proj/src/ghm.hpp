#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2/bitmat.hpp"
#include "steenrod.hpp"

// The unstable co-Koszul complexes computing the E2-page for strict units of
// truncated polynomial rings over F_2 (deg u = 2), the chart/table emitters,
// and the kernel-mod-image probes on A/A.Sq^1.
//
// A chart class u^n (x) Sq^I sits at stem 2n - |I| and filtration len(I).
// A column u^n carries the monomials with internal degree |I| - len(I) below
// 2n + slack; slack defaults to 1 (the boundary classes u^n Sq^{2n+1-ish}
// are included, matching the published charts).  The differential
// d(u^n x) = u^{2n} Sq^{2n+1} x uses the Sq^0 = 0 convention, which keeps it
// filtration-homogeneous; it is dropped when 2n exceeds the truncation.

namespace su::ghm {

using steenrod::SqMonomial;

struct ChartClass {
    int n = 1;
    SqMonomial mono;
    int stem() const { return 2 * n - steenrod::degree(mono); }
    int filtration() const { return static_cast<int>(mono.size()); }
    std::string str() const;  // u^n.Sq[...]
    bool operator<(const ChartClass& o) const;
    bool operator==(const ChartClass& o) const { return n == o.n && mono == o.mono; }
};

struct Window {
    int stem_min = -1, stem_max = 10;
    int filt_max = 6;
};

struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SplitViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoKoszulComplex {
    std::optional<int> truncation;  // nullopt = untruncated (needs n_max)
    int slack = 1;
    int n_max = 0;  // columns 1..n_max; from truncation when 0
    Window window;

    int column_limit() const { return truncation ? *truncation : n_max; }
    bool column_included(int n) const { return n >= 1 && n <= column_limit(); }
    bool mono_included(int n, const SqMonomial& m) const;
    // d out of column n survives the truncation?
    bool d_alive(int n) const { return !truncation || 2 * n <= *truncation; }
};

CoKoszulComplex build_complex(std::optional<int> truncation, Window window, int slack = 1, int n_max = 0);

// All classes in the window, keyed by (stem, filtration).
std::map<std::pair<int, int>, std::vector<ChartClass>> chart_classes(const CoKoszulComplex& c);

// d1 image of a class as chart classes (empty = zero).
std::vector<ChartClass> d1_image(const CoKoszulComplex& c, const ChartClass& cls);

struct E2Entry {
    int dim = 0;
    std::vector<ChartClass> representatives;  // quotient representatives
};

// Homology per (stem, filtration) over the window; padding is derived
// internally, so every reported bidegree is exact.
std::map<std::pair<int, int>, E2Entry> e2_page(const CoKoszulComplex& c);

// Contribution of a single u^n column at the given bidegree.
E2Entry column_e2(const CoKoszulComplex& c, int n, int stem, int filt);

struct HomotopyTable {
    int n_max = 0;
    // dims[n][i] = dim pi_i of the strict units of F_2[u]/u^{n+1}, i = 0..2n.
    std::vector<std::vector<int>> dims;
    std::vector<bool> collapse_certified;
};

HomotopyTable homotopy_table(int n_max, int slack = 1);

// Partition of the chart by the odd core k of n (n = k 2^j); verifies that
// no differential crosses components.
std::map<int, std::vector<ChartClass>> splitting_components(const CoKoszulComplex& c);

struct PostnikovChart {
    int m = 8;  // power of two; columns n = 2^j < m at filtration j
    std::map<std::pair<int, int>, std::vector<ChartClass>> classes;
    std::map<std::pair<int, int>, E2Entry> e2;
};

PostnikovChart postnikov_chart(int m, Window window, int slack = 1);

struct ConjectureReport {
    int k = 0, degree_cap = 0;
    std::vector<int> quotient_dims;  // per degree 0..cap
    bool holds_in_range = true;      // all zero up to the cap
};

// dim ker Sq^{8k+1} / im Sq^{4k+1} on A/A.Sq^1, per degree.
ConjectureReport check_conjecture(int k, int degree_cap);

struct ProbeDegree {
    int degree = 0;
    int dim_untruncated = 0;
    int dim_truncated = 0;  // domain cut to the u^n-column rule
    std::vector<std::string> representatives;
};

struct ProbeReport {
    int n = 0;
    std::vector<ProbeDegree> degrees;
};

// Basis of ker Sq^{2n+1} / im Sq^{n+1} per degree, n even; reports both the
// column-truncated and untruncated answers.
ProbeReport homology_probe(int n, int degree_min, int degree_max, int slack = 1);

// Is the class of the monomial nonzero in ker Sq^{2n+1}/im Sq^{n+1}?
bool probe_class_nonzero(int n, const SqMonomial& mono, bool truncated, int slack = 1);

}  // namespace su::ghm
