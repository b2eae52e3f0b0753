#include "cmlab/complexes.hpp"

#include <algorithm>

namespace cmlab::algebra {

Mat Mat::zero(const RingDescPtr& r, std::size_t rows, std::size_t cols) {
    Mat m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(rows * cols, Poly::zero(r));
    return m;
}

VecPoly Mat::column(std::size_t c) const {
    VecPoly v;
    v.c.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) v.c.push_back(at(r, c));
    return v;
}

std::vector<VecPoly> Mat::columns() const {
    std::vector<VecPoly> out;
    for (std::size_t c = 0; c < cols; ++c) out.push_back(column(c));
    return out;
}

Mat Mat::transpose() const {
    Mat t;
    t.rows = cols;
    t.cols = rows;
    t.a.resize(a.size());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.a[c * rows + r] = at(r, c);
    return t;
}

Mat Mat::tensor_identity(std::size_t m, const RingDescPtr& r) const {
    Mat t = Mat::zero(r, rows * m, cols * m);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < m; ++k)
                t.at(i * m + k, j * m + k) = at(i, j);
    return t;
}

Mat mat_mul(const Mat& A, const Mat& B, const PresentedRingPtr& ring, Budget& budget) {
    if (A.cols != B.rows) throw DomainError("matrix shape mismatch in product");
    Mat C = Mat::zero(ring->ambient(), A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < B.cols; ++j) {
            Poly acc = Poly::zero(ring->ambient());
            for (std::size_t k = 0; k < A.cols; ++k) acc += A.at(i, k) * B.at(k, j);
            C.at(i, j) = ring->nf(acc, budget);
        }
    return C;
}

bool mat_is_zero(const Mat& A, const PresentedRingPtr& ring, Budget& budget) {
    for (const auto& e : A.a)
        if (!ring->nf(e, budget).is_zero()) return false;
    return true;
}

VecPoly mat_apply(const Mat& A, const VecPoly& v, const PresentedRingPtr& ring,
                  Budget& budget) {
    if (A.cols != v.size()) throw DomainError("matrix/vector shape mismatch");
    VecPoly out(ring->ambient(), A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        Poly acc = Poly::zero(ring->ambient());
        for (std::size_t k = 0; k < A.cols; ++k) acc += A.at(i, k) * v.c[k];
        out.c[i] = ring->nf(acc, budget);
    }
    return out;
}

ModulePresentation ModulePresentation::free_module(const PresentedRingPtr& r,
                                                   std::size_t rank) {
    return {r, rank, {}};
}

ModulePresentation ModulePresentation::cyclic(const PresentedRingPtr& r,
                                              const std::vector<Poly>& ideal_gens) {
    ModulePresentation m{r, 1, {}};
    for (const auto& g : ideal_gens) {
        VecPoly v(r->ambient(), 1);
        v.c[0] = g;
        if (!v.is_zero()) m.relations.push_back(std::move(v));
    }
    return m;
}

bool ModulePresentation::is_zero(Budget& budget) const {
    Submodule sub(ring, rank, relations, budget);
    for (std::size_t j = 0; j < rank; ++j) {
        VecPoly e(ring->ambient(), rank);
        e.c[j] = Poly::constant(ring->ambient(), 1);
        if (!sub.contains(e, budget)) return false;
    }
    return true;
}

FreeComplex::FreeComplex(PresentedRingPtr ring, int lo, std::vector<std::size_t> ranks,
                         std::vector<Mat> diffs, Budget& budget)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (!ranks_.empty() && diffs_.size() + 1 != ranks_.size())
        throw DomainError("complex differential count mismatch");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows != ranks_[k] || diffs_[k].cols != ranks_[k + 1])
            throw DomainError("complex differential shape mismatch");
    }
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
        Mat sq = mat_mul(diffs_[k], diffs_[k + 1], ring_, budget);
        if (!mat_is_zero(sq, ring_, budget))
            throw DomainError("differential square is nonzero");
    }
}

std::size_t FreeComplex::rank(int degree) const {
    if (degree < lo_ || degree > hi()) return 0;
    return ranks_[std::size_t(degree - lo_)];
}

const Mat* FreeComplex::differential(int degree) const {
    // maps F_degree -> F_{degree-1}
    if (degree <= lo_ || degree > hi()) return nullptr;
    return &diffs_[std::size_t(degree - lo_ - 1)];
}

namespace {

std::vector<std::uint32_t> subsets_of_weight(std::size_t l, std::size_t w) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << l); ++s)
        if (std::uint32_t(__builtin_popcount(s)) == w) out.push_back(s);
    return out;
}

} // namespace

KoszulComplex koszul(const PresentedRingPtr& ring, const std::vector<Poly>& seq,
                     Budget& budget) {
    const std::size_t l = seq.size();
    if (l > 20) throw SizeGuard("sequence too long for subset basis");
    const auto& amb = ring->ambient();
    KoszulComplex K;
    for (const auto& f : seq) K.seq.push_back(ring->nf(f, budget));

    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i <= l; ++i) {
        K.subset_basis.push_back(subsets_of_weight(l, i));
        ranks.push_back(K.subset_basis.back().size());
    }
    std::vector<Mat> diffs;
    for (std::size_t i = 1; i <= l; ++i) {
        const auto& dom = K.subset_basis[i];
        const auto& cod = K.subset_basis[i - 1];
        Mat D = Mat::zero(amb, cod.size(), dom.size());
        for (std::size_t c = 0; c < dom.size(); ++c) {
            std::uint32_t S = dom[c];
            int t = 0;
            for (std::size_t j = 0; j < l; ++j) {
                if (!(S & (1u << j))) continue;
                ++t; // 1-based position of j inside S
                std::uint32_t T = S & ~(1u << j);
                std::size_t r = std::size_t(
                    std::find(cod.begin(), cod.end(), T) - cod.begin());
                Poly entry = K.seq[j];
                if (t % 2 == 0) entry = -entry;
                D.at(r, c) = ring->nf(entry, budget);
            }
        }
        diffs.push_back(std::move(D));
    }
    K.cx = std::make_shared<FreeComplex>(ring, 0, std::move(ranks), std::move(diffs),
                                         budget);
    return K;
}

ChainMap::ChainMap(std::shared_ptr<FreeComplex> src, std::shared_ptr<FreeComplex> dst,
                   std::vector<Mat> comps, Budget& budget)
    : src_(std::move(src)), dst_(std::move(dst)), comps_(std::move(comps)) {
    if (src_->lo() != dst_->lo())
        throw DomainError("chain map requires aligned complexes");
    const auto& ring = src_->ring();
    for (int d = src_->lo() + 1; d <= src_->hi(); ++d) {
        const Mat* ds = src_->differential(d);
        const Mat* dt = dst_->differential(d);
        const Mat* fd = component(d);
        const Mat* fdm1 = component(d - 1);
        if (!ds || !dt || !fd || !fdm1) continue;
        Mat left = mat_mul(*dt, *fd, ring, budget);       // d о phi
        Mat right = mat_mul(*fdm1, *ds, ring, budget);    // phi о d
        for (std::size_t i = 0; i < left.a.size(); ++i) {
            Poly diff = left.a[i] - right.a[i];
            if (!ring->nf(diff, budget).is_zero())
                throw DomainError("chain map squares do not commute");
        }
    }
}

const Mat* ChainMap::component(int degree) const {
    int k = degree - src_->lo();
    if (k < 0 || std::size_t(k) >= comps_.size()) return nullptr;
    return &comps_[std::size_t(k)];
}

ChainMap koszul_power_map(const PresentedRingPtr& ring, const std::vector<Poly>& seq,
                          std::uint32_t m, std::uint32_t n, Budget& budget) {
    if (m < n || n == 0) throw DomainError("power map needs m >= n >= 1");
    std::vector<Poly> xm, xn;
    for (const auto& f : seq) {
        xm.push_back(ring->nf(f.pow(m), budget));
        xn.push_back(ring->nf(f.pow(n), budget));
    }
    KoszulComplex Km = koszul(ring, xm, budget);
    KoszulComplex Kn = koszul(ring, xn, budget);
    const auto& amb = ring->ambient();
    std::vector<Mat> comps;
    for (std::size_t i = 0; i < Km.subset_basis.size(); ++i) {
        const auto& basis = Km.subset_basis[i];
        Mat F = Mat::zero(amb, basis.size(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Poly entry = Poly::constant(amb, 1);
            for (std::size_t j = 0; j < seq.size(); ++j)
                if (basis[c] & (1u << j)) entry *= seq[j].pow(m - n);
            F.at(c, c) = ring->nf(entry, budget);
        }
        comps.push_back(std::move(F));
    }
    return ChainMap(Km.cx, Kn.cx, std::move(comps), budget);
}

namespace {

// block-diagonal copies of the module relations across `blocks` coordinates
std::vector<VecPoly> relation_blocks(const ModulePresentation& M, std::size_t blocks) {
    std::vector<VecPoly> out;
    const auto& amb = M.ring->ambient();
    for (std::size_t b = 0; b < blocks; ++b)
        for (const auto& r : M.relations) {
            VecPoly v(amb, blocks * M.rank);
            for (std::size_t j = 0; j < M.rank; ++j) v.c[b * M.rank + j] = r.c[j];
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<VecPoly> standard_basis(const RingDescPtr& amb, std::size_t n) {
    std::vector<VecPoly> out;
    for (std::size_t j = 0; j < n; ++j) {
        VecPoly e(amb, n);
        e.c[j] = Poly::constant(amb, 1);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

std::vector<VecPoly> kernel_mod_relations(const Mat& D, const ModulePresentation& M,
                                          Budget& budget) {
    const auto& ring = M.ring;
    const auto& amb = ring->ambient();
    Mat Dm = D.tensor_identity(M.rank, amb);
    std::vector<VecPoly> sys = Dm.columns();
    const std::size_t ncols = sys.size();
    auto rel = relation_blocks(M, D.rows);
    for (auto& r : rel) sys.push_back(std::move(r));
    auto syz = syzygies(ring, D.rows * M.rank, sys, budget);
    std::vector<VecPoly> out;
    for (const auto& s : syz) {
        VecPoly v(amb, ncols);
        for (std::size_t i = 0; i < ncols; ++i) v.c[i] = s.c[i];
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

HomologyWitness homology_at(const FreeComplex& C, int degree,
                            const ModulePresentation& M, Budget& budget) {
    const auto& ring = C.ring();
    const auto& amb = ring->ambient();
    HomologyWitness w;
    const std::size_t n = C.rank(degree) * M.rank;
    if (n == 0) return w; // zero module, zero homology

    // cycles
    const Mat* dout = C.differential(degree);
    if (dout)
        w.cycle_gens = kernel_mod_relations(*dout, M, budget);
    else
        w.cycle_gens = standard_basis(amb, n);

    // boundaries plus relation copies
    std::vector<VecPoly> bgens;
    const Mat* din = C.differential(degree + 1);
    if (din) bgens = din->tensor_identity(M.rank, amb).columns();
    auto rel = relation_blocks(M, C.rank(degree));
    for (auto& r : rel) bgens.push_back(std::move(r));
    Submodule boundaries(ring, n, std::move(bgens), budget);

    for (std::size_t i = 0; i < w.cycle_gens.size(); ++i) {
        ModDivision d = boundaries.divide(w.cycle_gens[i], budget);
        if (d.r.is_zero()) {
            w.memberships.push_back(std::move(d));
        } else {
            w.zero = false;
            w.witness_index = i;
            w.witness_nf = d.r;
            return w;
        }
    }
    w.zero = true;
    return w;
}

bool homology_is_zero(const FreeComplex& C, int degree, const ModulePresentation& M,
                      Budget& budget) {
    return homology_at(C, degree, M, budget).zero;
}

InducedMapWitness induced_zero_on_homology(const ChainMap& phi, int degree,
                                           const ModulePresentation& M, Budget& budget) {
    const auto& src = phi.source();
    const auto& dst = phi.target();
    const auto& ring = src.ring();
    const auto& amb = ring->ambient();
    InducedMapWitness w;

    const std::size_t n_src = src.rank(degree) * M.rank;
    if (n_src == 0) return w;

    const Mat* dout = src.differential(degree);
    if (dout)
        w.cycle_gens = kernel_mod_relations(*dout, M, budget);
    else
        w.cycle_gens = standard_basis(amb, n_src);

    const Mat* f = phi.component(degree);
    if (!f) throw DomainError("chain map lacks the requested degree");
    Mat fm = f->tensor_identity(M.rank, amb);

    std::vector<VecPoly> bgens;
    const Mat* din = dst.differential(degree + 1);
    if (din) bgens = din->tensor_identity(M.rank, amb).columns();
    auto rel = relation_blocks(M, dst.rank(degree));
    for (auto& r : rel) bgens.push_back(std::move(r));
    Submodule boundaries(ring, dst.rank(degree) * M.rank, std::move(bgens), budget);

    for (std::size_t i = 0; i < w.cycle_gens.size(); ++i) {
        VecPoly img = mat_apply(fm, w.cycle_gens[i], ring, budget);
        w.images.push_back(img);
        VecPoly nf = boundaries.nf(img, budget);
        if (!nf.is_zero()) {
            w.zero = false;
            w.witness_index = i;
            w.witness_nf = nf;
            return w;
        }
    }
    w.zero = true;
    return w;
}

} // namespace cmlab::algebra
