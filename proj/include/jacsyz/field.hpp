#pragma once

#include <gmpxx.h>

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "jacsyz/errors.hpp"

namespace jacsyz {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Base field descriptor: either plain Q (degree 1) or a simple extension
// Q[t]/(m(t)) for a monic irreducible m supplied by the user. Irreducibility
// is a declared precondition; a violation surfaces as an error on inversion.
struct FieldDescriptor {
    // minpoly has size degree+1, monic, minpoly[i] is the coefficient of t^i.
    std::vector<Rational> minpoly;
    std::string generator_name;

    std::size_t degree() const { return minpoly.empty() ? 1 : minpoly.size() - 1; }
    bool is_rational() const { return degree() == 1; }

    static std::shared_ptr<const FieldDescriptor> rationals() {
        static auto q = std::make_shared<const FieldDescriptor>(
            FieldDescriptor{{Rational(0), Rational(1)}, ""});
        return q;
    }

    static std::shared_ptr<const FieldDescriptor> extension(std::vector<Rational> minpoly,
                                                            std::string name) {
        if (minpoly.size() < 3)
            throw PreconditionError("extension minimal polynomial must have degree >= 2");
        if (minpoly.back() != 1)
            throw PreconditionError("extension minimal polynomial must be monic");
        return std::make_shared<const FieldDescriptor>(
            FieldDescriptor{std::move(minpoly), std::move(name)});
    }

    bool same_as(const FieldDescriptor& other) const {
        return minpoly == other.minpoly && generator_name == other.generator_name;
    }
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

// An element of the base field: a degree-<k vector of rationals interpreted
// in Q[t]/(m(t)). Plain rationals are the k=1 case.
class FieldElement {
public:
    FieldElement() : field_(FieldDescriptor::rationals()), coords_(1, Rational(0)) {}

    explicit FieldElement(Rational q)
        : field_(FieldDescriptor::rationals()), coords_{std::move(q)} {}

    FieldElement(long num, long den = 1) : FieldElement(Rational(num, den)) {
        coords_[0].canonicalize();
    }

    FieldElement(FieldPtr field, std::vector<Rational> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (coords_.size() != field_->degree())
            throw InternalError("field element coordinate count mismatch");
    }

    static FieldElement zero(const FieldPtr& f) {
        return FieldElement(f, std::vector<Rational>(f->degree(), Rational(0)));
    }
    static FieldElement one(const FieldPtr& f) {
        std::vector<Rational> c(f->degree(), Rational(0));
        c[0] = 1;
        return FieldElement(f, std::move(c));
    }
    // The residue class of t, i.e. the extension generator.
    static FieldElement generator(const FieldPtr& f) {
        if (f->is_rational())
            throw PreconditionError("no extension generator in a pure rational field");
        std::vector<Rational> c(f->degree(), Rational(0));
        c[1] = 1;
        return FieldElement(f, std::move(c));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational_value() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }
    const Rational& rational_value() const {
        if (!is_rational_value())
            throw PreconditionError("field element is not rational");
        return coords_[0];
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.field_->degree() != b.field_->degree()) {
            FieldElement x = a, y = b;
            promote(x, y);
            return x.coords_ == y.coords_;
        }
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        FieldElement x = a, y = b;
        promote(x, y);
        for (std::size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
        return x;
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        FieldElement x = a, y = b;
        promote(x, y);
        for (std::size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] -= y.coords_[i];
        return x;
    }
    FieldElement operator-() const {
        FieldElement r = *this;
        for (auto& c : r.coords_) c = -c;
        return r;
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        FieldElement x = a, y = b;
        promote(x, y);
        const std::size_t k = x.coords_.size();
        if (k == 1) {
            x.coords_[0] *= y.coords_[0];
            return x;
        }
        std::vector<Rational> prod(2 * k - 1, Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
            if (x.coords_[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (y.coords_[j] == 0) continue;
                prod[i + j] += x.coords_[i] * y.coords_[j];
            }
        }
        reduce_mod_minpoly(prod, x.field_->minpoly);
        prod.resize(k);
        return FieldElement(x.field_, std::move(prod));
    }

    FieldElement inverse() const {
        if (is_zero()) throw PreconditionError("division by zero in the base field");
        const std::size_t k = coords_.size();
        if (k == 1) {
            std::vector<Rational> c{Rational(1) / coords_[0]};
            return FieldElement(field_, std::move(c));
        }
        // Extended Euclid in Q[t]: find u with u*this + v*m = 1. If gcd is not
        // constant the minimal polynomial was reducible.
        std::vector<Rational> r0 = field_->minpoly;
        std::vector<Rational> r1 = coords_;
        trim(r1);
        std::vector<Rational> s0{}, s1{Rational(1)}; // coefficients of `this`
        while (true) {
            trim(r1);
            if (r1.empty()) throw PreconditionError(
                "extension element is a zero divisor: minimal polynomial is reducible");
            if (r1.size() == 1) break;
            auto [q, r] = poly_divmod(r0, r1);
            std::vector<Rational> s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        const Rational inv = Rational(1) / r1[0];
        std::vector<Rational> u(k, Rational(0));
        for (std::size_t i = 0; i < s1.size() && i < 2 * k; ++i) {
            if (i >= u.size()) u.resize(i + 1, Rational(0));
            u[i] = s1[i] * inv;
        }
        reduce_mod_minpoly(u, field_->minpoly);
        u.resize(k);
        return FieldElement(field_, std::move(u));
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inverse();
    }

    FieldElement pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElement base = *this, acc = FieldElement::one(field_);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    // Embeds into `target`; errors if the element genuinely lives in an
    // incompatible extension.
    FieldElement embedded_into(const FieldPtr& target) const {
        if (field_->same_as(*target)) return *this;
        if (is_rational_value()) {
            std::vector<Rational> c(target->degree(), Rational(0));
            c[0] = coords_[0];
            return FieldElement(target, std::move(c));
        }
        throw PreconditionError(
            "field mismatch: extension element used where field " +
            (target->is_rational() ? std::string("Q") : "Q(" + target->generator_name + ")") +
            " was declared");
    }

    std::string str() const {
        if (is_rational_value()) return to_string(coords_[0]);
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            if (!first) os << (coords_[i] > 0 ? " + " : " - ");
            Rational a = (!first && coords_[i] < 0) ? Rational(-coords_[i]) : coords_[i];
            if (i == 0) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << field_->generator_name;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        if (first) return "0";
        return os.str();
    }

    // Total order for canonical sorting of points; not arithmetic-meaningful.
    friend bool compare_less(const FieldElement& a, const FieldElement& b) {
        FieldElement x = a, y = b;
        promote(x, y);
        for (std::size_t i = 0; i < x.coords_.size(); ++i) {
            int c = cmp(x.coords_[i], y.coords_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

private:
    static void promote(FieldElement& x, FieldElement& y) {
        if (x.field_->same_as(*y.field_)) return;
        if (x.field_->is_rational()) {
            x = x.embedded_into(y.field_);
        } else if (y.field_->is_rational()) {
            y = y.embedded_into(x.field_);
        } else {
            throw PreconditionError("arithmetic between two distinct extension fields");
        }
    }

    static void trim(std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    static std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }
    static std::vector<Rational> poly_sub(std::vector<Rational> a,
                                          const std::vector<Rational>& b) {
        if (a.size() < b.size()) a.resize(b.size(), Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        trim(a);
        return a;
    }
    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
        std::vector<Rational> a, const std::vector<Rational>& b) {
        std::vector<Rational> q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0,
                                Rational(0));
        while (a.size() >= b.size() && !a.empty()) {
            Rational c = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
            trim(a);
        }
        return {std::move(q), std::move(a)};
    }
    static void reduce_mod_minpoly(std::vector<Rational>& p,
                                   const std::vector<Rational>& m) {
        const std::size_t k = m.size() - 1;
        for (std::size_t i = p.size(); i-- > k;) {
            if (p[i] == 0) continue;
            Rational c = p[i];
            p[i] = 0;
            // t^i = t^{i-k} * (t^k) and t^k = -(m_0 + ... + m_{k-1} t^{k-1}).
            for (std::size_t j = 0; j < k; ++j) p[i - k + j] -= c * m[j];
        }
        p.resize(std::max<std::size_t>(p.size(), k), Rational(0));
    }

    FieldPtr field_;
    std::vector<Rational> coords_;
};

} // namespace jacsyz
