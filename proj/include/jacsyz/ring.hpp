#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jacsyz/field.hpp"

namespace jacsyz {

// Shared ring context: variable names and the coefficient field.
struct Ring {
    std::vector<std::string> vars;
    FieldPtr field;

    std::size_t nvars() const { return vars.size(); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    static std::shared_ptr<const Ring> make(std::vector<std::string> vars,
                                            FieldPtr field = FieldDescriptor::rationals()) {
        return std::make_shared<const Ring>(Ring{std::move(vars), std::move(field)});
    }

    // Standard projective ring x0..xN over Q.
    static std::shared_ptr<const Ring> projective(std::size_t n,
                                                  FieldPtr field = FieldDescriptor::rationals()) {
        std::vector<std::string> v;
        for (std::size_t i = 0; i <= n; ++i) v.push_back("x" + std::to_string(i));
        return make(std::move(v), std::move(field));
    }

    bool compatible_with(const Ring& o) const {
        return vars == o.vars && field->same_as(*o.field);
    }
};

using RingPtr = std::shared_ptr<const Ring>;

} // namespace jacsyz
