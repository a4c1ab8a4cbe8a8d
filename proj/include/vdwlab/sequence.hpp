// Lazily materialized one-sided infinite sequences.
//
// A SequenceCore owns a growing prefix buffer and knows how to extend it; a
// Sequence is a core plus a shift offset, so sigma^k is just an offset bump.
// Determinism contract: a core asked twice for index i always answers the same
// symbol, and lazy filling is observationally identical to eager filling.
//
// Views returned by prefix() point into the core's buffer and are invalidated
// when a later call forces the buffer to grow.  Search loops that want lock
// free reads should materialize their maximum index first, which every caller
// in this library does.

#ifndef VDWLAB_SEQUENCE_HPP
#define VDWLAB_SEQUENCE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vdwlab/errors.hpp"
#include "vdwlab/substitution.hpp"
#include "vdwlab/word.hpp"

namespace vdwlab {

// Largest index any sequence will materialize.  The default covers prefixes of
// length 4^13; the environment variable VDW_LAB_HORIZON_CAP overrides it.
inline std::uint64_t global_horizon_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("VDW_LAB_HORIZON_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1} << 26;
    }();
    return cap;
}

// Human-readable description of how a sequence or oracle was built; serialized
// into reports so that every witness names its own provenance.
struct Descriptor {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params; // ordered

    std::string to_string() const {
        std::string s = kind;
        char sep = ':';
        for (const auto& [k, v] : params) {
            s += sep;
            s += k + "=" + v;
            sep = ',';
        }
        return s;
    }
};

class SequenceCore {
public:
    virtual ~SequenceCore() = default;
    virtual Descriptor describe() const = 0;

    // Ensures at least n symbols are materialized.
    void ensure(std::uint64_t n) {
        if (n > global_horizon_cap())
            throw HorizonExceededError("sequence prefix of length " + std::to_string(n));
        std::lock_guard<std::mutex> lock(mu_);
        if (buf_.size() < n) extend(buf_, n);
    }

    // View of symbols [from, from + len).  Caller must have ensured coverage.
    std::string_view view(std::uint64_t from, std::uint64_t len) const {
        return std::string_view(buf_).substr(static_cast<std::size_t>(from),
                                             static_cast<std::size_t>(len));
    }

    std::uint64_t materialized() const { return buf_.size(); }

protected:
    virtual void extend(std::string& buf, std::uint64_t need) = 0;

private:
    std::string buf_;
    std::mutex mu_;
};

class SubstitutionFixedPointCore final : public SequenceCore {
public:
    SubstitutionFixedPointCore(Substitution sub, char seed)
        : sub_(std::move(sub)), seed_(seed) {
        if (sub_.image(seed)[0] != seed)
            throw SeedNotExtensibleError(std::string(1, seed));
    }

    Descriptor describe() const override {
        return {"substitution-fixed-point",
                {{"rule0", sub_.image('0')},
                 {"rule1", sub_.image('1')},
                 {"seed", std::string(1, seed_)}}};
    }

    const Substitution& rule() const { return sub_; }

protected:
    // Substituting an existing prefix of the fixed point yields a longer
    // prefix of the same point, so growth is incremental.
    void extend(std::string& buf, std::uint64_t need) override {
        if (buf.empty()) buf.assign(1, seed_);
        while (buf.size() < need) buf = sub_.apply(buf);
    }

private:
    Substitution sub_;
    char seed_;
};

class PeriodicCore final : public SequenceCore {
public:
    explicit PeriodicCore(Word pattern) : pattern_(std::move(pattern)) {
        if (pattern_.empty()) throw UsageError("periodic pattern must be nonempty");
        require_word(pattern_);
    }

    Descriptor describe() const override { return {"periodic", {{"pattern", pattern_}}}; }

protected:
    void extend(std::string& buf, std::uint64_t need) override {
        while (buf.size() < need) buf += pattern_;
    }

private:
    Word pattern_;
};

// The point w 0^infinity.
class WordZerosCore final : public SequenceCore {
public:
    explicit WordZerosCore(Word head) : head_(std::move(head)) { require_word(head_); }

    Descriptor describe() const override { return {"word-then-zeros", {{"word", head_}}}; }

protected:
    void extend(std::string& buf, std::uint64_t need) override {
        if (buf.empty()) buf = head_;
        if (buf.size() < need) buf.append(static_cast<std::size_t>(need - buf.size()), '0');
    }

private:
    Word head_;
};

class Sequence {
public:
    Sequence(std::shared_ptr<SequenceCore> core, std::uint64_t offset = 0)
        : core_(std::move(core)), offset_(offset) {}

    static Sequence substitution_fixed_point(const Substitution& sub, char seed) {
        return Sequence(std::make_shared<SubstitutionFixedPointCore>(sub, seed));
    }
    static Sequence periodic(const Word& pattern) {
        return Sequence(std::make_shared<PeriodicCore>(pattern));
    }
    static Sequence word_then_zeros(const Word& head) {
        return Sequence(std::make_shared<WordZerosCore>(head));
    }

    Sequence shifted(std::uint64_t k) const { return Sequence(core_, offset_ + k); }
    std::uint64_t offset() const { return offset_; }
    std::shared_ptr<SequenceCore> core() const { return core_; }

    Descriptor describe() const {
        Descriptor d = core_->describe();
        if (offset_ != 0) d.params.emplace_back("shift", std::to_string(offset_));
        return d;
    }

    void ensure(std::uint64_t n) const { core_->ensure(offset_ + n); }

    char at(std::uint64_t i) const {
        core_->ensure(offset_ + i + 1);
        return core_->view(offset_ + i, 1)[0];
    }

    // View of the first n symbols; materializes them.  Invalidated by any
    // later materialization past the current buffer.
    std::string_view prefix(std::uint64_t n) const {
        core_->ensure(offset_ + n);
        return core_->view(offset_, n);
    }

    Word prefix_word(std::uint64_t n) const { return Word(prefix(n)); }

    bool starts_with(const Word& w) const {
        return prefix(w.size()) == std::string_view(w);
    }

private:
    std::shared_ptr<SequenceCore> core_;
    std::uint64_t offset_;
};

// Index of the first disagreement below cap, or cap if there is none.  Works
// in blocks so that sequences materialize no more than the comparison needs.
inline std::uint64_t agreement_length(const Sequence& a, const Sequence& b,
                                      std::uint64_t cap) {
    constexpr std::uint64_t block = 1 << 14;
    for (std::uint64_t start = 0; start < cap; start += block) {
        std::uint64_t len = std::min(block, cap - start);
        a.ensure(start + len);
        b.ensure(start + len);
        std::string_view va = a.core()->view(a.offset() + start, len);
        std::string_view vb = b.core()->view(b.offset() + start, len);
        auto [ia, ib] = std::mismatch(va.begin(), va.end(), vb.begin());
        if (ia != va.end()) return start + static_cast<std::uint64_t>(ia - va.begin());
    }
    return cap;
}

// All occurrence positions of w in x within [0, horizon], i.e. positions p
// with p <= horizon where w matches (the window may extend past horizon).
inline std::vector<std::uint64_t> occurrences(const Sequence& x, const Word& w,
                                              std::uint64_t horizon) {
    if (w.empty()) throw UsageError("occurrence scan needs a nonempty word");
    std::vector<std::uint64_t> out;
    std::uint64_t span = horizon + w.size();
    std::string_view view = x.prefix(span);
    std::size_t pos = view.find(w);
    while (pos != std::string_view::npos && pos <= horizon) {
        out.push_back(pos);
        pos = view.find(w, pos + 1);
    }
    return out;
}

} // namespace vdwlab

#endif
