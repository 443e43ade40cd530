#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace qdrd {

// Pipeline phases the arithmetic ledger distinguishes. The square-root and
// division savings of the square-root-free scheme are phase-specific
// (normalization and back substitution), while its extra cost shows up in
// detection, so counts are kept per phase.
enum class Phase : int {
    factorization = 0,
    normalization = 1,
    back_substitution = 2,
    detection = 3,
};

inline constexpr std::array<Phase, 4> kAllPhases = {
    Phase::factorization, Phase::normalization, Phase::back_substitution, Phase::detection};

inline constexpr std::string_view phase_name(Phase p) {
    switch (p) {
    case Phase::factorization: return "factorization";
    case Phase::normalization: return "normalization";
    case Phase::back_substitution: return "back-substitution";
    case Phase::detection: return "detection";
    }
    return "?";
}

// Real-arithmetic operation tallies. Complex operations are booked in real
// units: a complex add is 2 real adds, a complex multiply is 4 real
// multiplies + 2 real adds, a complex-by-real divide is 2 real divides.
struct OpCounts {
    std::uint64_t adds = 0;
    std::uint64_t mults = 0;
    std::uint64_t divs = 0;
    std::uint64_t sqrts = 0;

    OpCounts& operator+=(const OpCounts& o) {
        adds += o.adds;
        mults += o.mults;
        divs += o.divs;
        sqrts += o.sqrts;
        return *this;
    }
    friend OpCounts operator+(OpCounts a, const OpCounts& b) { return a += b; }
    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Injectable per-phase operation counter. One counter per logical thread of
// execution; the shared disabled() instance drops every update and is safe
// to pass from concurrent callers.
class OpCounter {
public:
    OpCounter() = default;

    static OpCounter& disabled() {
        static OpCounter c{false};
        return c;
    }

    bool enabled() const { return enabled_; }
    Phase phase() const { return phase_; }

    void set_phase(Phase p) {
        if (enabled_) phase_ = p;
    }

    void count_adds(std::uint64_t k = 1) {
        if (enabled_) at(phase_).adds += k;
    }
    void count_mults(std::uint64_t k = 1) {
        if (enabled_) at(phase_).mults += k;
    }
    void count_divs(std::uint64_t k = 1) {
        if (enabled_) at(phase_).divs += k;
    }
    void count_sqrts(std::uint64_t k = 1) {
        if (enabled_) at(phase_).sqrts += k;
    }

    const OpCounts& counts(Phase p) const { return counts_[static_cast<int>(p)]; }

    OpCounts total() const {
        OpCounts t;
        for (const auto& c : counts_) t += c;
        return t;
    }

    void reset() {
        for (auto& c : counts_) c = OpCounts{};
        phase_ = Phase::factorization;
    }

private:
    explicit OpCounter(bool enabled) : enabled_(enabled) {}

    OpCounts& at(Phase p) { return counts_[static_cast<int>(p)]; }

    std::array<OpCounts, 4> counts_{};
    Phase phase_ = Phase::factorization;
    bool enabled_ = true;
};

// RAII phase switch; restores the previous phase on scope exit.
class PhaseScope {
public:
    PhaseScope(OpCounter& c, Phase p) : counter_(c), prev_(c.phase()) { counter_.set_phase(p); }
    ~PhaseScope() { counter_.set_phase(prev_); }
    PhaseScope(const PhaseScope&) = delete;
    PhaseScope& operator=(const PhaseScope&) = delete;

private:
    OpCounter& counter_;
    Phase prev_;
};

} // namespace qdrd
