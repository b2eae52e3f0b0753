#pragma once

#include <optional>

#include "cmlab/module_gb.hpp"

namespace cmlab::algebra {

// Matrix over a presented ring, entries kept as ambient normal forms.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Poly> a; // row-major

    static Mat zero(const RingDescPtr& r, std::size_t rows, std::size_t cols);

    Poly& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Poly& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    VecPoly column(std::size_t c) const;
    std::vector<VecPoly> columns() const;
    Mat transpose() const;
    // Kronecker expansion with an identity block of the given size
    Mat tensor_identity(std::size_t m, const RingDescPtr& r) const;
};

Mat mat_mul(const Mat& A, const Mat& B, const PresentedRingPtr& ring, Budget& budget);
bool mat_is_zero(const Mat& A, const PresentedRingPtr& ring, Budget& budget);
VecPoly mat_apply(const Mat& A, const VecPoly& v, const PresentedRingPtr& ring, Budget& budget);

// Finitely presented module M = R^rank / <relations>.
struct ModulePresentation {
    PresentedRingPtr ring;
    std::size_t rank = 1;
    std::vector<VecPoly> relations;

    static ModulePresentation free_module(const PresentedRingPtr& r, std::size_t rank = 1);
    static ModulePresentation cyclic(const PresentedRingPtr& r, const std::vector<Poly>& ideal_gens);

    bool is_zero(Budget& budget) const; // every basis vector lies in the relation span
};

// Chain complex of free modules: rank(d) for degrees lo..lo+ranks.size()-1,
// differential d_k : F_k -> F_{k-1}.  Construction validates d о d = 0.
class FreeComplex {
public:
    FreeComplex(PresentedRingPtr ring, int lo, std::vector<std::size_t> ranks,
                std::vector<Mat> diffs, Budget& budget);

    const PresentedRingPtr& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + int(ranks_.size()) - 1; }
    std::size_t rank(int degree) const;
    // differential F_degree -> F_{degree-1}; nullptr when out of range
    const Mat* differential(int degree) const;

private:
    PresentedRingPtr ring_;
    int lo_;
    std::vector<std::size_t> ranks_;
    std::vector<Mat> diffs_; // diffs_[k] : F_{lo+k+1} -> F_{lo+k}
};

struct KoszulComplex {
    std::vector<Poly> seq;
    std::vector<std::vector<std::uint32_t>> subset_basis; // per degree, bitmasks
    std::shared_ptr<FreeComplex> cx;
};

KoszulComplex koszul(const PresentedRingPtr& ring, const std::vector<Poly>& seq,
                     Budget& budget);

// Degreewise map of complexes; construction validates the squares commute.
class ChainMap {
public:
    ChainMap(std::shared_ptr<FreeComplex> src, std::shared_ptr<FreeComplex> dst,
             std::vector<Mat> comps, Budget& budget); // comps[k] in degree src.lo()+k

    const FreeComplex& source() const { return *src_; }
    const FreeComplex& target() const { return *dst_; }
    const Mat* component(int degree) const;

private:
    std::shared_ptr<FreeComplex> src_, dst_;
    std::vector<Mat> comps_;
};

// comparison map K(x^m) -> K(x^n) for m >= n >= 1, multiplication by
// prod_{j in S} x_j^(m-n) on each subset basis vector
ChainMap koszul_power_map(const PresentedRingPtr& ring, const std::vector<Poly>& seq,
                          std::uint32_t m, std::uint32_t n, Budget& budget);

// Homology data of C (x) M at one degree.  When zero, memberships express
// every cycle generator over the boundary submodule basis; otherwise the
// first failing cycle and its nonzero normal form are kept as the witness.
struct HomologyWitness {
    bool zero = true;
    std::vector<VecPoly> cycle_gens;
    std::vector<ModDivision> memberships;
    std::optional<std::size_t> witness_index;
    VecPoly witness_nf;
};

// generators of the kernel of (D tensor 1_M) acting on M-coordinate columns
std::vector<VecPoly> kernel_mod_relations(const Mat& D, const ModulePresentation& M,
                                          Budget& budget);

HomologyWitness homology_at(const FreeComplex& C, int degree,
                            const ModulePresentation& M, Budget& budget);

bool homology_is_zero(const FreeComplex& C, int degree, const ModulePresentation& M,
                      Budget& budget);

// Does the induced map H_i(source) -> H_i(target) vanish?  Checks that the
// image of every cycle generator is a boundary downstairs.
struct InducedMapWitness {
    bool zero = true;
    std::vector<VecPoly> cycle_gens;
    std::vector<VecPoly> images;
    std::optional<std::size_t> witness_index;
    VecPoly witness_nf;
};

InducedMapWitness induced_zero_on_homology(const ChainMap& phi, int degree,
                                           const ModulePresentation& M, Budget& budget);

} // namespace cmlab::algebra
