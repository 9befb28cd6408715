#pragma once

#include <map>
#include <vector>

#include "qlab/instance.hpp"

namespace qlab {

struct QueryRecord {
    CellRef cell;
    CellEntry entry;
};

using QueryTranscript = std::vector<QueryRecord>;

// Query-counted access to a hidden input.  Both the grid-backed oracle and
// the adversary expose this surface so algorithms run against either.
class Oracle {
public:
    virtual ~Oracle() = default;

    virtual CellEntry query(CellRef c) = 0;
    virtual int n() const = 0;
    virtual int m() const = 0;
    virtual int k() const { return 1; }
    virtual Family family() const = 0;
    virtual long long queries() const = 0;
    virtual const QueryTranscript& transcript() const = 0;
};

// Oracle over a concrete hidden GridInput.  By default every query counts,
// including repeats; dedup mode answers repeats from the transcript without
// charging them.
class CountingOracle final : public Oracle {
public:
    explicit CountingOracle(GridInput hidden, bool count_repeats = true);

    CellEntry query(CellRef c) override;
    int n() const override { return hidden_.n; }
    int m() const override { return hidden_.m; }
    int k() const override { return hidden_.k; }
    Family family() const override { return hidden_.family; }
    long long queries() const override { return total_; }
    const QueryTranscript& transcript() const override { return transcript_; }

    long long column_queries(int col) const { return per_column_[static_cast<size_t>(col)]; }
    const GridInput& hidden() const { return hidden_; }

private:
    GridInput hidden_;
    QueryTranscript transcript_;
    std::vector<long long> per_column_;
    std::vector<bool> seen_;
    long long total_ = 0;
    bool count_repeats_;
};

// Read-through cache so algorithms never pay twice for a cell they already
// learned; the paper's algorithms never re-query.
class CachedReader {
public:
    explicit CachedReader(Oracle& oracle) : oracle_(oracle) {}

    CellEntry read(CellRef c) {
        auto it = cache_.find(c);
        if (it != cache_.end()) return it->second;
        CellEntry e = oracle_.query(c);
        cache_.emplace(c, e);
        return e;
    }

    bool known(CellRef c) const { return cache_.count(c) != 0; }
    size_t known_count() const { return cache_.size(); }
    Oracle& oracle() { return oracle_; }

    // Reconstructs the full input once every cell has been read.
    GridInput snapshot_full() const;

private:
    Oracle& oracle_;
    std::map<CellRef, CellEntry> cache_;
};

}  // namespace qlab
