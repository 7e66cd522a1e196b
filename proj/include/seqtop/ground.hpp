#pragma once
#include <algorithm>
#include <string>
#include <vector>

#include "seqtop/errors.hpp"
#include "seqtop/subsets.hpp"

namespace seqtop {

// Finite labeled ground set; bit i of a Mask refers to labels()[i].
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > kMaxGround)
      throw CapacityError("ground set exceeds " + std::to_string(kMaxGround) + " points");
    for (size_t i = 0; i < labels_.size(); ++i)
      for (size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          throw PreconditionError("duplicate ground label '" + labels_[i] + "'");
  }

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[i] == name) return i;
    return -1;
  }

  int require(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw PreconditionError("unknown point '" + name + "'");
    return i;
  }

  // Alphabetically sorted label list for a subset; the canonical external form.
  std::vector<std::string> names(Mask m) const {
    std::vector<std::string> out;
    for (int i : indices_of(m)) out.push_back(labels_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string format(Mask m) const {
    std::string s = "{";
    bool first = true;
    for (const auto& n : names(m)) {
      if (!first) s += ",";
      s += n;
      first = false;
    }
    return s + "}";
  }

  Mask mask_of(const std::vector<std::string>& names) const {
    Mask m = 0;
    for (const auto& n : names) m |= bit(require(n));
    return m;
  }

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace seqtop
