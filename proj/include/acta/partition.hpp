#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace acta {

  // Disjoint-set forest with path halving and union by size.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1) {
      std::iota(_parent.begin(), _parent.end(), std::size_t(0));
    }

    std::size_t find(std::size_t x) noexcept {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    // Returns true if x and y were in different blocks.
    bool unite(std::size_t x, std::size_t y) noexcept {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (_size[x] < _size[y]) {
        std::swap(x, y);
      }
      _parent[y] = x;
      _size[x] += _size[y];
      return true;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _parent.size();
    }

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
  };

  class Partition;
  Partition to_partition(UnionFind& uf);

  // A partition of {0, ..., n - 1} in canonical form: class ids are numbered
  // 0, 1, ... in order of first occurrence, so two Partitions describe the
  // same equivalence iff their class vectors are equal.
  class Partition {
   public:
    Partition() = default;

    // Any labelling; it is renumbered into canonical form.
    static Partition from_labels(std::vector<std::size_t> const& labels);
    static Partition discrete(std::size_t n);
    static Partition universal(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _class_of.size();
    }
    [[nodiscard]] std::size_t num_classes() const noexcept {
      return _num_classes;
    }
    [[nodiscard]] std::size_t class_of(std::size_t x) const {
      return _class_of[x];
    }
    [[nodiscard]] bool same(std::size_t x, std::size_t y) const {
      return _class_of[x] == _class_of[y];
    }
    [[nodiscard]] std::vector<std::size_t> const& labels() const noexcept {
      return _class_of;
    }
    // Classes as sorted member lists, ordered by smallest member.
    [[nodiscard]] std::vector<std::vector<std::size_t>> classes() const;
    [[nodiscard]] std::vector<std::size_t> members_of(std::size_t x) const;

    // True if every class of *this lies inside a class of other.
    [[nodiscard]] bool refines(Partition const& other) const;
    // Intersection of the two equivalences.
    [[nodiscard]] Partition meet(Partition const& other) const;
    // Least equivalence containing both.
    [[nodiscard]] Partition join(Partition const& other) const;

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<std::size_t> _class_of;
    std::size_t              _num_classes = 0;
  };

}  // namespace acta
