#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetcl {

/// An ordered list of variable names over the implicit base field Q.
/// Variable index is positional and stable; names are unique.
class RingSpec {
public:
    explicit RingSpec(std::vector<std::string> variables) : vars_(std::move(variables)) {
        if (vars_.empty())
            throw std::invalid_argument("RingSpec: no variables");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::invalid_argument("RingSpec: duplicate variable '" + vars_[i] + "'");
    }

    std::size_t size() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string>& names() const { return vars_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.vars_ == b.vars_; }
    friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline RingPtr make_ring(std::vector<std::string> variables) {
    return std::make_shared<const RingSpec>(std::move(variables));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace jetcl
