#pragma once

#include "cmlab/adapter.hpp"

#include <map>

namespace cmlab::seq {

WprVerdict is_weakly_proregular(RingAdapter& A, const Seq& x, int bound, Budget& budget);

ParamVerdict is_parameter_sequence(RingAdapter& A, const Seq& x, Budget& budget);

struct SpsVerdict {
    bool value = false;
    std::size_t failing_prefix = 0; // 1-based length of first non-parameter prefix
    std::vector<ParamVerdict> trace;
};

SpsVerdict is_strong_parameter_sequence(RingAdapter& A, const Seq& x, Budget& budget);

RegVerdict is_regular_sequence(RingAdapter& A, const Seq& x, Budget& budget);

SequenceReport sequence_report(RingAdapter& A, const Seq& x, int wpr_bound, bool with_grade,
                               Budget& budget);

struct CmViolation {
    std::vector<std::string> elements;
    std::size_t length = 0;
    grade::GradeValue grade;
    std::string certificate;
    std::string citation;
};

struct CmVerdict {
    bool violation_found = false;
    std::optional<CmViolation> violation;
    std::size_t sequences_checked = 0;
    std::size_t sps_found = 0;
    std::size_t regular_confirmed = 0;
    std::string note;
};

// shared caches keyed by sorted handle sets (parameter verdicts and ideal
// grades are permutation invariant; colon steps depend on the prefix ideal)
struct CmMemo {
    std::map<Seq, ParamVerdict> parameter;
    std::map<Seq, grade::GradeValue> grade;
    std::map<std::pair<Seq, Elem>, RegStep> step;
    std::size_t height_computations = 0;
};

CmVerdict cohen_macaulay_verdict(RingAdapter& A, const std::vector<Seq>& pool, Budget& budget,
                                 CmMemo* memo = nullptr);

// ordered tuples of distinct pool elements, lengths 1..maxlen, index-lexicographic
std::vector<Seq> enumerate_pool(std::size_t pool_size, std::size_t maxlen);

struct UnmixedResult {
    bool witness_found = false;
    std::string witness;
    std::string colon_str;
    Height ideal_height;
    Height colon_height;
    std::vector<std::string> witness_prime; // a minimal prime over (I : f) deeper than ht I
    std::size_t candidates_tried = 0;
    std::string note;
};

UnmixedResult unmixedness_probe(const algebra::IdealHandle& I, int degree_bound, Budget& budget);

struct LocalityStep {
    std::size_t step = 0; // 1-based
    bool locally_regular = false;
    std::string obstruction; // generator of the colon that stays nonzero locally
};

struct LocalityPlanEntry {
    std::vector<std::string> prime;
    std::vector<LocalityStep> steps;
    bool locally_regular = false;
};

std::vector<LocalityPlanEntry> locality_reduction(PresentedRingAdapter& A, const Seq& x,
                                                  Budget& budget);

} // namespace cmlab::seq
