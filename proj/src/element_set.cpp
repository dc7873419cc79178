// Copyright 2026 The robsub Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robsub/element_set.hpp"

#include <algorithm>

namespace robsub {

GroundSet::GroundSet(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("ground set must contain at least one element");
}

GroundSet::GroundSet(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n == 0) throw DomainError("ground set must contain at least one element");
  if (!labels_.empty() && labels_.size() != n) {
    throw DomainError("label count " + std::to_string(labels_.size()) +
                      " does not match ground set size " + std::to_string(n));
  }
}

std::string GroundSet::label(ElementId e) const {
  if (!contains(e)) throw DomainError("element " + std::to_string(e) + " out of range");
  return labels_.empty() ? std::to_string(e) : labels_[e];
}

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<ElementId> members)
    : ElementSet(universe) {
  for (ElementId e : members) insert(e);
}

ElementSet::ElementSet(std::size_t universe, std::span<const ElementId> members)
    : ElementSet(universe) {
  for (ElementId e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (const std::size_t tail = universe & 63; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t count = 0;
  for (std::uint64_t w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool ElementSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void ElementSet::insert(ElementId e) {
  if (e >= universe_) {
    throw DomainError("element " + std::to_string(e) + " out of range for universe of size " +
                      std::to_string(universe_));
  }
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void ElementSet::erase(ElementId e) {
  if (e < universe_) words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

void ElementSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

ElementSet ElementSet::with(ElementId e) const {
  ElementSet copy = *this;
  copy.insert(e);
  return copy;
}

ElementSet ElementSet::without(ElementId e) const {
  ElementSet copy = *this;
  copy.erase(e);
  return copy;
}

void ElementSet::require_same_universe(const ElementSet& other) const {
  if (other.universe_ != universe_) {
    throw DomainError("element sets over different universes (" + std::to_string(universe_) +
                      " vs " + std::to_string(other.universe_) + ")");
  }
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<ElementId> ElementSet::to_vector() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (ElementId e : *this) out.push_back(e);
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (ElementId e : *this) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::size_t ElementSet::next_from(std::size_t pos) const noexcept {
  if (pos >= universe_) return universe_;
  std::size_t word = pos >> 6;
  std::uint64_t bits = words_[word] & (~std::uint64_t{0} << (pos & 63));
  while (bits == 0) {
    if (++word == words_.size()) return universe_;
    bits = words_[word];
  }
  return std::min(universe_, word * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
}

}  // namespace robsub
