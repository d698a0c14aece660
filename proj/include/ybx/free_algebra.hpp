#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace ybx {

// Word over a generator alphabet; generators are small integer ids and the
// empty word is the unit 1. Products are plain concatenation: relations are
// applied only when an expression is evaluated in a concrete algebra.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultMaxWordLength = 16;

inline std::string word_str(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    for (int id : w) {
        if (id < 0 || static_cast<std::size_t>(id) >= names.size())
            throw std::out_of_range("word_str: generator id " + std::to_string(id) +
                                    " has no name");
        out += names[static_cast<std::size_t>(id)];
    }
    return out;
}

// Finite linear combination of words, the free unital associative algebra on
// the alphabet. Terms are kept in lexicographic word order with zero
// coefficients pruned, so equality and printing are canonical.
class FreeElement {
public:
    static FreeElement zero(const FieldDescriptor& fd) { return FreeElement(fd); }

    static FreeElement unit(const FieldDescriptor& fd) {
        FreeElement e(fd);
        e.terms_.emplace(Word{}, Scalar::one(fd));
        return e;
    }

    static FreeElement generator(const FieldDescriptor& fd, int id) {
        if (id < 0) throw std::invalid_argument("generator id must be nonnegative");
        FreeElement e(fd);
        e.terms_.emplace(Word{id}, Scalar::one(fd));
        return e;
    }

    const FieldDescriptor& field() const { return fd_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FreeElement operator+(const FreeElement& o) const {
        require_same_field(fd_, o.fd_, "free element +");
        FreeElement r(*this);
        for (const auto& [w, c] : o.terms_) r.accumulate(w, c);
        return r;
    }

    FreeElement operator-(const FreeElement& o) const { return *this + (-o); }

    FreeElement operator-() const {
        FreeElement r(fd_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    FreeElement scaled(const Scalar& lambda) const {
        require_same_field(fd_, lambda.field(), "free element scale");
        FreeElement r(fd_);
        if (lambda.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * lambda);
        return r;
    }

    // Concatenation product. A word longer than max_len means some caller is
    // silently generating unbounded degrees, so it is an error, not a trim.
    FreeElement times(const FreeElement& o, std::size_t max_len = kDefaultMaxWordLength) const {
        require_same_field(fd_, o.fd_, "free element *");
        FreeElement r(fd_);
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_) {
                if (w1.size() + w2.size() > max_len)
                    throw std::length_error("free product exceeds the degree bound " +
                                            std::to_string(max_len));
                Word w(w1);
                w.insert(w.end(), w2.begin(), w2.end());
                r.accumulate(w, c1 * c2);
            }
        return r;
    }

    bool operator==(const FreeElement& o) const {
        return fd_ == o.fd_ && terms_ == o.terms_;
    }
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            append_term(out, first, c, word_str(w, names));
            first = false;
        }
        return out;
    }

    // Shared term renderer: "w", "-w", "3/2*w", joined with " + " / " - ".
    static void append_term(std::string& out, bool first, const Scalar& c,
                            const std::string& body) {
        Scalar mag = c;
        bool negative = false;
        if (c.field().is_rational() && c.rational() < 0) {
            negative = true;
            mag = -c;
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (!mag.is_one()) out += mag.str() + "*";
        out += body;
    }

private:
    explicit FreeElement(const FieldDescriptor& fd) : fd_(fd) {}

    void accumulate(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    FieldDescriptor fd_;
    std::map<Word, Scalar> terms_;
};

}  // namespace ybx
