#include "cmlab/resolution.hpp"

namespace cmlab::algebra {

namespace {

// drop generators lying in the span of the others; repeat to a fixpoint
std::vector<VecPoly> prune_generators(const PresentedRingPtr& ring, std::size_t rank,
                                      std::vector<VecPoly> gens, Budget& budget) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<VecPoly> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            Submodule span(ring, rank, others, budget);
            if (span.contains(gens[i], budget)) {
                gens.erase(gens.begin() + std::ptrdiff_t(i));
                changed = true;
                break;
            }
        }
    }
    return gens;
}

Mat columns_to_mat(const RingDescPtr& amb, std::size_t rows,
                   const std::vector<VecPoly>& cols) {
    Mat m = Mat::zero(amb, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c].c[r];
    return m;
}

} // namespace

Resolution free_resolution(const ModulePresentation& M, std::size_t max_length,
                           Budget& budget) {
    const auto& ring = M.ring;
    const auto& amb = ring->ambient();

    std::vector<std::size_t> ranks{M.rank};
    std::vector<Mat> diffs;
    bool complete = false;

    std::vector<VecPoly> cur = prune_generators(ring, M.rank, M.relations, budget);
    std::size_t cur_rank = M.rank;
    for (std::size_t step = 1; step <= max_length; ++step) {
        for (auto& v : cur)
            for (auto& p : v.c) p = ring->nf(p, budget);
        if (cur.empty()) { complete = true; break; }
        ranks.push_back(cur.size());
        diffs.push_back(columns_to_mat(amb, cur_rank, cur));
        auto next = syzygies(ring, cur_rank, cur, budget);
        next = prune_generators(ring, cur.size(), std::move(next), budget);
        cur_rank = cur.size();
        cur = std::move(next);
        if (cur.empty()) { complete = true; break; }
    }
    Resolution res;
    res.complete = complete;
    res.cx = std::make_shared<FreeComplex>(ring, 0, std::move(ranks), std::move(diffs),
                                           budget);
    return res;
}

bool ext_is_zero(std::size_t i, const IdealHandle& I, const ModulePresentation& M,
                 Budget& budget) {
    const auto& ring = I.ring();
    if (ring->str() != M.ring->str())
        throw DomainError("Ext arguments over different rings");
    if (I.is_unit()) return true; // resolving the zero module

    ModulePresentation quotient = ModulePresentation::cyclic(ring, I.gens());
    Resolution res = free_resolution(quotient, i + 1, budget);
    const FreeComplex& F = *res.cx;
    if (!res.complete && F.hi() < int(i) + 1)
        throw BudgetExceeded("resolution too short for requested Ext degree");

    const std::size_t a_i = F.rank(int(i));
    if (a_i == 0) return true;
    const auto& amb = ring->ambient();

    // cochain modules are M^(a_k); maps are transposed differentials
    const Mat* d_next = F.differential(int(i) + 1); // F_{i+1} -> F_i
    const Mat* d_this = i > 0 ? F.differential(int(i)) : nullptr;

    std::vector<VecPoly> cocycles;
    if (d_next) {
        cocycles = kernel_mod_relations(d_next->transpose(), M, budget);
    } else {
        for (std::size_t j = 0; j < a_i * M.rank; ++j) {
            VecPoly e(amb, a_i * M.rank);
            e.c[j] = Poly::constant(amb, 1);
            cocycles.push_back(std::move(e));
        }
    }

    std::vector<VecPoly> bgens;
    if (d_this) {
        Mat delta_prev = d_this->transpose(); // M^(a_{i-1}) -> M^(a_i)
        bgens = delta_prev.tensor_identity(M.rank, amb).columns();
    }
    for (std::size_t b = 0; b < a_i; ++b)
        for (const auto& r : M.relations) {
            VecPoly v(amb, a_i * M.rank);
            for (std::size_t j = 0; j < M.rank; ++j) v.c[b * M.rank + j] = r.c[j];
            bgens.push_back(std::move(v));
        }
    Submodule cobound(ring, a_i * M.rank, std::move(bgens), budget);
    for (const auto& z : cocycles)
        if (!cobound.contains(z, budget)) return false;
    return true;
}

bool presentation_graded(const ModulePresentation& M) {
    // infer degree shifts: deg(entry_j) + s_j constant within each relation
    std::vector<std::optional<long>> shift(M.rank);
    for (const auto& v : M.relations)
        for (const auto& p : v.c)
            if (!p.is_zero() && !p.homogeneous()) return false;
    bool progress = true;
    std::vector<const VecPoly*> pending;
    for (const auto& v : M.relations) pending.push_back(&v);
    if (pending.empty()) return true;
    shift[0] = 0;
    while (progress) {
        progress = false;
        for (const auto* vp : pending) {
            const auto& v = *vp;
            std::optional<long> level;
            for (std::size_t j = 0; j < M.rank; ++j) {
                if (v.c[j].is_zero() || !shift[j]) continue;
                long cand = long(v.c[j].total_degree()) + *shift[j];
                if (!level) level = cand;
                else if (*level != cand) return false;
            }
            if (!level) continue;
            for (std::size_t j = 0; j < M.rank; ++j) {
                if (v.c[j].is_zero()) continue;
                long s = *level - long(v.c[j].total_degree());
                if (!shift[j]) { shift[j] = s; progress = true; }
                else if (*shift[j] != s) return false;
            }
        }
    }
    // relations connecting only unassigned coordinates: seed and retry
    for (std::size_t j = 0; j < M.rank; ++j) {
        if (shift[j]) continue;
        shift[j] = 0;
        progress = true;
        while (progress) {
            progress = false;
            for (const auto* vp : pending) {
                const auto& v = *vp;
                std::optional<long> level;
                for (std::size_t k = 0; k < M.rank; ++k) {
                    if (v.c[k].is_zero() || !shift[k]) continue;
                    long cand = long(v.c[k].total_degree()) + *shift[k];
                    if (!level) level = cand;
                    else if (*level != cand) return false;
                }
                if (!level) continue;
                for (std::size_t k = 0; k < M.rank; ++k) {
                    if (v.c[k].is_zero()) continue;
                    long s = *level - long(v.c[k].total_degree());
                    if (!shift[k]) { shift[k] = s; progress = true; }
                    else if (*shift[k] != s) return false;
                }
            }
        }
    }
    return true;
}

PdResult projective_dimension_graded(const ModulePresentation& M, Budget& budget) {
    if (!M.ring->is_polynomial_ring())
        return {std::nullopt, "ambient ring is not a polynomial ring"};
    if (!presentation_graded(M))
        return {std::nullopt, "presentation admits no consistent grading"};
    std::size_t cap = M.ring->ambient()->nvars() + 2;
    Resolution res = free_resolution(M, cap, budget);
    if (!res.complete)
        return {std::nullopt, "resolution did not terminate within the syzygy bound"};
    return {res.cx->hi(), ""};
}

} // namespace cmlab::algebra
