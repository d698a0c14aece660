#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "free_algebra.hpp"

namespace ybx {

// Linear combination of m-fold tensors of words, an element of the m-th
// tensor power of the free algebra. The map keeps terms in lexicographic
// key order, which is the canonical ordering used for printing and for
// syntactic comparison of expansions.
class TensorElement {
public:
    static TensorElement zero(const FieldDescriptor& fd, std::size_t arity) {
        if (arity == 0) throw std::invalid_argument("tensor arity must be positive");
        return TensorElement(fd, arity);
    }

    static TensorElement from_free(const FreeElement& e) {
        TensorElement t(e.field(), 1);
        for (const auto& [w, c] : e.terms()) t.terms_.emplace(std::vector<Word>{w}, c);
        return t;
    }

    std::size_t arity() const { return arity_; }
    const FieldDescriptor& field() const { return fd_; }
    const std::map<std::vector<Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorElement operator+(const TensorElement& o) const {
        require_compatible(o, "tensor +");
        TensorElement r(*this);
        for (const auto& [k, c] : o.terms_) r.accumulate(k, c);
        return r;
    }

    TensorElement operator-(const TensorElement& o) const {
        require_compatible(o, "tensor -");
        TensorElement r(*this);
        for (const auto& [k, c] : o.terms_) r.accumulate(k, -c);
        return r;
    }

    TensorElement scaled(const Scalar& lambda) const {
        require_same_field(fd_, lambda.field(), "tensor scale");
        TensorElement r(fd_, arity_);
        if (lambda.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * lambda);
        return r;
    }

    bool operator==(const TensorElement& o) const {
        return fd_ == o.fd_ && arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            std::string body;
            for (std::size_t f = 0; f < k.size(); ++f) {
                if (f) body += "\xE2\x8A\x97";  // U+2297 circled times
                body += word_str(k[f], names);
            }
            FreeElement::append_term(out, first, c, body);
            first = false;
        }
        return out;
    }

    // The symbolic two-site operator on adjacent factors (pos, pos+1):
    //   u (x) v  |->  uv (x) 1  +  1 (x) uv  -  u (x) v
    // extended linearly over all terms.
    TensorElement apply_adjacent_r(std::size_t pos,
                                   std::size_t max_len = kDefaultMaxWordLength) const {
        if (pos + 1 >= arity_)
            throw std::invalid_argument("apply_adjacent_r: position " + std::to_string(pos) +
                                        " out of range for arity " + std::to_string(arity_));
        TensorElement r(fd_, arity_);
        for (const auto& [k, c] : terms_) {
            const Word& u = k[pos];
            const Word& v = k[pos + 1];
            if (u.size() + v.size() > max_len)
                throw std::length_error("tensor product exceeds the degree bound " +
                                        std::to_string(max_len));
            Word uv(u);
            uv.insert(uv.end(), v.begin(), v.end());
            std::vector<Word> k1(k);
            k1[pos] = uv;
            k1[pos + 1] = Word{};
            r.accumulate(k1, c);
            std::vector<Word> k2(k);
            k2[pos] = Word{};
            k2[pos + 1] = uv;
            r.accumulate(k2, c);
            r.accumulate(k, -c);
        }
        return r;
    }

    friend TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
        require_same_field(a.fd_, b.fd_, "tensor product");
        TensorElement r(a.fd_, a.arity_ + b.arity_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                std::vector<Word> k(ka);
                k.insert(k.end(), kb.begin(), kb.end());
                r.accumulate(k, ca * cb);
            }
        return r;
    }

private:
    TensorElement(const FieldDescriptor& fd, std::size_t arity) : fd_(fd), arity_(arity) {}

    void require_compatible(const TensorElement& o, const char* where) const {
        require_same_field(fd_, o.fd_, where);
        if (arity_ != o.arity_)
            throw std::invalid_argument(std::string(where) + ": arity mismatch");
    }

    void accumulate(const std::vector<Word>& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    FieldDescriptor fd_;
    std::size_t arity_;
    std::map<std::vector<Word>, Scalar> terms_;
};

// The induced product on low tensor powers. Writing R for the two-site
// operator above, the three implemented components are
//   mu_11 : T1 x T1 -> T2,  a (x) b |-> R(a (x) b)
//   mu_21 : T2 x T1 -> T3,  applied as R on sites (1,2) then sites (2,3)
//           composed in the order R12 . R23
//   mu_12 : T1 x T2 -> T3,  composed in the order R23 . R12.
// Higher components are deliberately not provided: their defining rule is
// not determined by the two-site operator alone.

inline TensorElement mu_11(const FreeElement& a, const FreeElement& b,
                           std::size_t max_len = kDefaultMaxWordLength) {
    return tensor_product(TensorElement::from_free(a), TensorElement::from_free(b))
        .apply_adjacent_r(0, max_len);
}

inline TensorElement mu_21(const TensorElement& x, const FreeElement& y,
                           std::size_t max_len = kDefaultMaxWordLength) {
    if (x.arity() != 2)
        throw std::invalid_argument("mu_21: left factor must have arity 2");
    return tensor_product(x, TensorElement::from_free(y))
        .apply_adjacent_r(1, max_len)
        .apply_adjacent_r(0, max_len);
}

inline TensorElement mu_12(const FreeElement& x, const TensorElement& y,
                           std::size_t max_len = kDefaultMaxWordLength) {
    if (y.arity() != 2)
        throw std::invalid_argument("mu_12: right factor must have arity 2");
    return tensor_product(TensorElement::from_free(x), y)
        .apply_adjacent_r(0, max_len)
        .apply_adjacent_r(1, max_len);
}

// Evaluates a symbolic tensor in a unital algebra under an assignment of
// generator ids to elements. Words evaluate by left-to-right multiplication
// starting from the unit, so the algebra is expected to be associative for
// words of length above two. Returns coordinates in the n^arity Kronecker
// basis, index ((i1*n + i2)*n + i3)... matching the matrix lift convention.
inline std::vector<Scalar> evaluate_in_algebra(const TensorElement& t, const FiniteAlgebra& alg,
                                               const std::vector<Element>& assignment) {
    require_same_field(t.field(), alg.field(), "evaluate_in_algebra");
    std::optional<Element> unit = alg.unit();
    if (!unit) unit = find_unit(alg);
    if (!unit)
        throw std::invalid_argument("evaluate_in_algebra: the algebra has no unit");
    for (const Element& e : assignment)
        if (e.size() != alg.dim())
            throw std::invalid_argument("evaluate_in_algebra: assigned element has wrong length");

    const std::size_t n = alg.dim();
    std::size_t total = 1;
    for (std::size_t f = 0; f < t.arity(); ++f) total *= n;
    std::vector<Scalar> out(total, Scalar::zero(alg.field()));

    auto eval_word = [&](const Word& w) {
        Element acc = *unit;
        for (int id : w) {
            if (id < 0 || static_cast<std::size_t>(id) >= assignment.size())
                throw std::invalid_argument("evaluate_in_algebra: generator " +
                                            std::to_string(id) + " is unassigned");
            acc = alg.multiply(acc, assignment[static_cast<std::size_t>(id)]);
        }
        return acc;
    };

    for (const auto& [k, c] : t.terms()) {
        std::vector<Element> factors;
        factors.reserve(k.size());
        for (const Word& w : k) factors.push_back(eval_word(w));
        // walk all index tuples of the Kronecker basis
        std::vector<std::size_t> idx(k.size(), 0);
        while (true) {
            Scalar v = c;
            for (std::size_t f = 0; f < k.size() && !v.is_zero(); ++f) v *= factors[f][idx[f]];
            if (!v.is_zero()) {
                std::size_t flat = 0;
                for (std::size_t f = 0; f < k.size(); ++f) flat = flat * n + idx[f];
                out[flat] += v;
            }
            std::size_t pos = k.size();
            while (pos > 0 && idx[pos - 1] == n - 1) idx[--pos] = 0;
            if (pos == 0) break;
            ++idx[pos - 1];
        }
    }
    return out;
}

}  // namespace ybx
