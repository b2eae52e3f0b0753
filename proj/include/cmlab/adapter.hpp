#pragma once

#include "cmlab/grade.hpp"
#include "cmlab/primes.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cmlab::seq {

using cmlab::Budget;
using algebra::Poly;
using algebra::PresentedRingPtr;
using algebra::Height;

// handle into the adapter's element table
using Elem = std::size_t;
using Seq = std::vector<Elem>;

enum class WprKind {
    CertifiedNoetherian,
    CertifiedByModel,
    VerifiedUpToBound,
    Counterexample,
};

struct WprVerdict {
    WprKind kind = WprKind::CertifiedNoetherian;
    // Counterexample: the level n whose obstruction persists for every m.
    // VerifiedUpToBound: highest n for which a working m was found.
    int level = 0;
    int bound = 0;
    std::string citation;
    std::string detail;

    bool affirmative() const {
        return kind == WprKind::CertifiedNoetherian || kind == WprKind::CertifiedByModel;
    }
    std::string kind_str() const;
};

struct ParamVerdict {
    bool value = false;
    std::string reason;
    std::string citation;
    Height height;
    std::size_t length = 0;
};

struct RegVerdict {
    bool value = false;
    // 1-based index of the first step whose colon check fails; 0 when none
    std::size_t failing_step = 0;
    bool improper = false;
    std::string witness;
    std::string detail;
};

struct PrefixReport {
    std::size_t length = 0;
    WprVerdict wpr;
    ParamVerdict parameter;
    std::optional<grade::GradeValue> grade;
};

struct SequenceReport {
    std::vector<std::string> elements;
    std::vector<PrefixReport> prefixes;
    bool strong_parameter = false;
    RegVerdict regular;
};

// step outcome for is_regular_sequence
struct RegStep {
    bool nzd = false;
    std::string witness; // element of the colon outside the prefix ideal
    std::string detail;
};

// Polymorphic ring backend.  Implementations document per method whether the
// answer is exact or bounded; verdict structs carry the licensing citation
// whenever a model rule rather than a direct computation decided.
class RingAdapter {
public:
    virtual ~RingAdapter() = default;

    virtual std::string name() const = 0;
    virtual bool noetherian() const = 0;
    virtual std::string capabilities() const = 0;

    virtual std::vector<Elem> parse_elements(const std::string& comma_list, Budget& budget) = 0;
    virtual std::string element_str(Elem h) const = 0;

    virtual int dimension(Budget& budget) = 0;
    virtual bool is_proper(const Seq& x, Budget& budget) = 0;
    virtual Height height(const Seq& x, Budget& budget) = 0;
    virtual WprVerdict weakly_proregular(const Seq& x, int bound, Budget& budget) = 0;
    virtual ParamVerdict parameter(const Seq& x, Budget& budget) = 0;
    virtual grade::GradeValue sequence_grade(const Seq& x, Budget& budget) = 0;
    virtual RegStep regular_step(const Seq& prefix, Elem x, Budget& budget) = 0;
    virtual grade::GradeValue pdepth(Budget& budget) = 0;
};

// Noetherian f.p. backend: every operation is a direct exact computation.
class PresentedRingAdapter final : public RingAdapter {
public:
    // max_ideal: generators of the distinguished maximal ideal used by pdepth;
    // defaults to all the variables
    PresentedRingAdapter(PresentedRingPtr ring, std::vector<Poly> max_ideal = {});

    std::string name() const override;
    bool noetherian() const override { return true; }
    std::string capabilities() const override;

    std::vector<Elem> parse_elements(const std::string& comma_list, Budget& budget) override;
    std::string element_str(Elem h) const override;

    int dimension(Budget& budget) override;
    bool is_proper(const Seq& x, Budget& budget) override;
    Height height(const Seq& x, Budget& budget) override;
    WprVerdict weakly_proregular(const Seq& x, int bound, Budget& budget) override;
    ParamVerdict parameter(const Seq& x, Budget& budget) override;
    grade::GradeValue sequence_grade(const Seq& x, Budget& budget) override;
    RegStep regular_step(const Seq& prefix, Elem x, Budget& budget) override;
    grade::GradeValue pdepth(Budget& budget) override;

    const PresentedRingPtr& ring() const { return ring_; }
    const std::vector<Poly>& elements() const { return elems_; }
    Elem add_element(const Poly& f, Budget& budget);
    std::vector<Poly> polys(const Seq& x) const;

    // honest Koszul-power search through induced maps on homology; used by
    // tests to exercise the machinery Noetherian rings make optional
    WprVerdict wpr_by_search(const Seq& x, int bound, Budget& budget);

private:
    PresentedRingPtr ring_;
    std::vector<Poly> max_ideal_;
    std::vector<Poly> elems_;
};

} // namespace cmlab::seq
