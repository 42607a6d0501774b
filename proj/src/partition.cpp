#include "acta/partition.hpp"

#include <map>
#include <utility>

namespace acta {

  Partition Partition::from_labels(std::vector<std::size_t> const& labels) {
    Partition                          p;
    std::map<std::size_t, std::size_t> renumber;
    p._class_of.reserve(labels.size());
    for (auto l : labels) {
      auto [it, fresh] = renumber.try_emplace(l, renumber.size());
      p._class_of.push_back(it->second);
    }
    p._num_classes = renumber.size();
    return p;
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t(0));
    return from_labels(labels);
  }

  Partition Partition::universal(std::size_t n) {
    return from_labels(std::vector<std::size_t>(n, 0));
  }

  std::vector<std::vector<std::size_t>> Partition::classes() const {
    std::vector<std::vector<std::size_t>> result(_num_classes);
    for (std::size_t x = 0; x < _class_of.size(); ++x) {
      result[_class_of[x]].push_back(x);
    }
    return result;
  }

  std::vector<std::size_t> Partition::members_of(std::size_t x) const {
    std::vector<std::size_t> result;
    for (std::size_t y = 0; y < _class_of.size(); ++y) {
      if (_class_of[y] == _class_of[x]) {
        result.push_back(y);
      }
    }
    return result;
  }

  bool Partition::refines(Partition const& other) const {
    std::vector<std::size_t> image(_num_classes, other.num_classes());
    for (std::size_t x = 0; x < _class_of.size(); ++x) {
      auto& slot = image[_class_of[x]];
      if (slot == other.num_classes()) {
        slot = other.class_of(x);
      } else if (slot != other.class_of(x)) {
        return false;
      }
    }
    return true;
  }

  Partition Partition::meet(Partition const& other) const {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
    std::vector<std::size_t>                                   labels;
    labels.reserve(size());
    for (std::size_t x = 0; x < size(); ++x) {
      auto key = std::make_pair(_class_of[x], other.class_of(x));
      labels.push_back(ids.try_emplace(key, ids.size()).first->second);
    }
    return from_labels(labels);
  }

  Partition Partition::join(Partition const& other) const {
    UnionFind                uf(size());
    std::vector<std::size_t> first_a(_num_classes, size());
    std::vector<std::size_t> first_b(other.num_classes(), size());
    for (std::size_t x = 0; x < size(); ++x) {
      auto& fa = first_a[_class_of[x]];
      fa       = fa == size() ? x : fa;
      uf.unite(fa, x);
      auto& fb = first_b[other.class_of(x)];
      fb       = fb == size() ? x : fb;
      uf.unite(fb, x);
    }
    return to_partition(uf);
  }

  Partition to_partition(UnionFind& uf) {
    std::vector<std::size_t> labels(uf.size());
    for (std::size_t x = 0; x < uf.size(); ++x) {
      labels[x] = uf.find(x);
    }
    return Partition::from_labels(labels);
  }

}  // namespace acta
