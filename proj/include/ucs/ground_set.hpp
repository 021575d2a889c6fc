#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ucs/member_set.hpp"

namespace ucs {

// An ordered finite universe of labelled points. Immutable after
// construction; cheap to copy (shared representation).
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels)
      : data_(std::make_shared<const Data>(std::move(labels))) {}

  std::size_t size() const { return data_ ? data_->labels.size() : 0; }
  const std::string& label(std::size_t i) const {
    if (!data_ || i >= data_->labels.size())
      throw std::out_of_range("ground set: point index out of range");
    return data_->labels[i];
  }
  const std::vector<std::string>& labels() const {
    static const std::vector<std::string> empty;
    return data_ ? data_->labels : empty;
  }

  bool has_label(const std::string& l) const {
    return data_ && data_->index.count(l) > 0;
  }
  std::size_t index_of(const std::string& l) const {
    if (data_) {
      auto it = data_->index.find(l);
      if (it != data_->index.end()) return it->second;
    }
    throw std::invalid_argument("ground set: unknown label '" + l + "'");
  }

  MemberSet empty_member() const { return MemberSet(size()); }
  MemberSet full_member() const {
    MemberSet m(size());
    for (std::size_t i = 0; i < size(); ++i) m.add(i);
    return m;
  }
  MemberSet member_of(const std::vector<std::string>& point_labels) const {
    MemberSet m(size());
    for (const auto& l : point_labels) m.add(index_of(l));
    return m;
  }

  std::vector<std::string> labels_of(const MemberSet& m) const {
    std::vector<std::string> out;
    m.for_each_index([&](std::size_t i) { out.push_back(label(i)); });
    return out;
  }

  // Same universe: identical label sequences.
  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    if (a.data_ == b.data_) return true;
    return a.labels() == b.labels();
  }

  // Labels p1..pn; the stock universe for generated fixtures.
  static GroundSet numbered(std::size_t n, const std::string& prefix = "p");

 private:
  struct Data {
    explicit Data(std::vector<std::string> ls) : labels(std::move(ls)) {
      if (labels.empty()) throw std::invalid_argument("ground set: must have at least one point");
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const std::string& l = labels[i];
        if (l.empty()) throw std::invalid_argument("ground set: empty label");
        for (char c : l)
          if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#')
            throw std::invalid_argument("ground set: label '" + l + "' contains reserved character");
        if (!index.emplace(l, i).second)
          throw std::invalid_argument("ground set: duplicate label '" + l + "'");
      }
    }
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };

  std::shared_ptr<const Data> data_;
};

}  // namespace ucs
