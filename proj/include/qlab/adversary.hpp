#pragma once

#include <map>
#include <optional>

#include "qlab/oracle.hpp"

namespace qlab {

struct InconsistentTranscript : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The deterministic adversary against family f: the first m queries in a
// column are answered (1,null,null,null); the k-th query with k > m is
// answered (0,null,null,k-m).  Defined in the paper for n = 2m; for n > 2m
// the column pointer wraps modulo m so the answer stays in the alphabet.
class AdversaryState {
public:
    AdversaryState(int n, int m);

    // Answers a fresh cell and records it; re-asking returns the recorded
    // answer without extending the transcript.
    CellEntry answer(CellRef c);

    int n() const { return n_; }
    int m() const { return m_; }
    const QueryTranscript& transcript() const { return transcript_; }
    std::optional<CellEntry> answered(CellRef c) const;

private:
    int n_;
    int m_;
    std::map<CellRef, CellEntry> answered_;
    std::vector<int> per_column_;
    QueryTranscript transcript_;
};

// Oracle adapter so the paper's algorithms can play against the adversary.
class AdversaryOracle final : public Oracle {
public:
    AdversaryOracle(int n, int m) : state_(n, m) {}

    CellEntry query(CellRef c) override { return state_.answer(c); }
    int n() const override { return state_.n(); }
    int m() const override { return state_.m(); }
    Family family() const override { return Family::F; }
    long long queries() const override { return static_cast<long long>(state_.transcript().size()); }
    const QueryTranscript& transcript() const override { return state_.transcript(); }

    AdversaryState& state() { return state_; }

private:
    AdversaryState state_;
};

// Validates that `t` is a prefix the adversary could have produced; throws
// InconsistentTranscript otherwise.
void check_adversary_transcript(const QueryTranscript& t, int n, int m);

// Fills every unqueried cell with (0,null,null,null); always negative.
GridInput complete_to_negative(const QueryTranscript& t, int n, int m);

// Constructs a positive input consistent with the transcript when some
// column has at most m queried cells and at least 4m cells are unqueried;
// nullopt signals that the adversary bound is exhausted.
std::optional<GridInput> complete_to_positive(const QueryTranscript& t, int n, int m);

}  // namespace qlab
