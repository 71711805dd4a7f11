#pragma once

// Ordered variable tables. A VarTable fixes the symbols and the order used by
// the graded-lexicographic monomial comparison, so canonical forms and
// serialization are deterministic. Tables are immutable and shared by pointer.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace affkm {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

class VarTable {
  public:
    static VarTablePtr make(std::vector<std::string> names) {
        return VarTablePtr(new VarTable(std::move(names)));
    }

    std::size_t size() const { return names_.size(); }
    const std::string &name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string> &names() const { return names_; }

    bool has(const std::string &n) const { return index_.count(n) != 0; }
    std::size_t index(const std::string &n) const {
        auto it = index_.find(n);
        if (it == index_.end())
            throw std::invalid_argument("VarTable: unknown variable '" + n + "'");
        return it->second;
    }

    bool same(const VarTable &o) const { return this == &o || names_ == o.names_; }

    // True when every variable of this table appears in `bigger`.
    bool embeds_into(const VarTable &bigger) const {
        for (const auto &n : names_)
            if (!bigger.has(n)) return false;
        return true;
    }

  private:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("VarTable: duplicate variable '" + names_[i] + "'");
        }
    }

    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

inline bool same_table(const VarTablePtr &a, const VarTablePtr &b) {
    return a == b || (a && b && a->same(*b));
}

} // namespace affkm
