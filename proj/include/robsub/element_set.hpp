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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robsub/errors.hpp"

namespace robsub {

/// Dense index into a ground set, 0 <= id < n.
using ElementId = std::uint32_t;

/// The universe V = {0, ..., n-1} with optional display labels.
class GroundSet {
 public:
  explicit GroundSet(std::size_t n);
  GroundSet(std::size_t n, std::vector<std::string> labels);

  std::size_t size() const noexcept { return n_; }
  bool contains(ElementId e) const noexcept { return e < n_; }
  /// The label if one was given, otherwise the decimal id.
  std::string label(ElementId e) const;

 private:
  std::size_t n_;
  std::vector<std::string> labels_;
};

/// Subset of a ground set of fixed universe size, stored as a bit set.
///
/// Iteration visits members in ascending id order, which the solvers rely on
/// for deterministic tie-breaking.
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    const_iterator() = default;
    ElementId operator*() const noexcept { return static_cast<ElementId>(pos_); }
    const_iterator& operator++() noexcept {
      pos_ = owner_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) noexcept {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const noexcept { return pos_ == other.pos_; }

   private:
    friend class ElementSet;
    const_iterator(const ElementSet* owner, std::size_t pos) : owner_(owner), pos_(pos) {}
    const ElementSet* owner_ = nullptr;
    std::size_t pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<ElementId> members);
  ElementSet(std::size_t universe, std::span<const ElementId> members);

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(ElementId e) const noexcept {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
  }
  /// Throws DomainError if e is outside the universe.
  void insert(ElementId e);
  void erase(ElementId e);
  void clear() noexcept;

  ElementSet with(ElementId e) const;
  ElementSet without(ElementId e) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  /// Set difference.
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& other) const noexcept = default;

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  std::vector<ElementId> to_vector() const;
  std::string to_string() const;

  const_iterator begin() const noexcept { return {this, next_from(0)}; }
  const_iterator end() const noexcept { return {this, universe_}; }

 private:
  std::size_t next_from(std::size_t pos) const noexcept;
  void require_same_universe(const ElementSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace robsub
