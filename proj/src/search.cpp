#include "tricirc/search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "tricirc/error.hpp"

namespace tricirc {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finaliser over the running hash
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

struct Partition {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> pos;       // vertex -> position
  std::vector<int> cell;      // vertex -> start position of its cell
  std::vector<int> cell_end;  // cell start -> one past its last position
  int cells = 0;

  explicit Partition(int n) : lab(n), pos(n), cell(n, 0), cell_end(n, 0), cells(n > 0 ? 1 : 0) {
    std::iota(lab.begin(), lab.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
    if (n > 0) cell_end[0] = n;
  }
  bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

class Engine {
 public:
  Engine(const SimpleGraph& g, const SearchOptions& opt)
      : g_(g), n_(g.order()), opt_(opt), count_(n_, 0), cell_mark_(n_, 0), in_queue_(n_, 0) {}

  SearchResult run() {
    SearchResult out;
    if (n_ == 0) return out;
    Partition root(n_);
    std::vector<int> init{0};
    cur_hash_.push_back(refine(root, init));
    search(root, 0);
    out.generators = gens_;
    out.base = first_path_;
    out.nodes = nodes_;
    out.group_order = 1;
    for (std::size_t level = 0; level < first_path_.size(); ++level) {
      const auto fixing = generators_fixing(first_path_, level);
      const OrbitSet o = orbits(n_, fixing);
      out.group_order *= static_cast<unsigned>(o.orbits[o.orbit_of[first_path_[level]]].size());
    }
    if (opt_.canonical) {
      out.canonical_labeling.assign(n_, 0);
      for (int p = 0; p < n_; ++p) out.canonical_labeling[best_lab_[p]] = p;
    }
    return out;
  }

 private:
  // Equitable refinement; returns a hash of the splitting trace.
  std::uint64_t refine(Partition& p, const std::vector<int>& splitters) {
    std::deque<int> queue;
    for (int s : splitters) {
      queue.push_back(s);
      in_queue_[s] = 1;
    }
    std::uint64_t h = 0x51ed270b27f1a3c5ULL;
    std::vector<int> touched, touched_cells, splitter;
    while (!queue.empty()) {
      const int w = queue.front();
      queue.pop_front();
      in_queue_[w] = 0;
      splitter.assign(p.lab.begin() + w, p.lab.begin() + p.cell_end[w]);
      touched.clear();
      touched_cells.clear();
      for (int v : splitter)
        for (int x : g_.neighbors(v))
          if (count_[x]++ == 0) touched.push_back(x);
      for (int x : touched) {
        const int c = p.cell[x];
        if (!cell_mark_[c]) {
          cell_mark_[c] = 1;
          touched_cells.push_back(c);
        }
      }
      std::sort(touched_cells.begin(), touched_cells.end());
      for (int c : touched_cells) {
        cell_mark_[c] = 0;
        const int e = p.cell_end[c];
        if (e - c == 1) continue;
        int lo = count_[p.lab[c]], hi = lo;
        for (int i = c + 1; i < e; ++i) {
          lo = std::min(lo, count_[p.lab[i]]);
          hi = std::max(hi, count_[p.lab[i]]);
        }
        if (lo == hi) continue;
        std::stable_sort(p.lab.begin() + c, p.lab.begin() + e,
                         [&](int a, int b) { return count_[a] < count_[b]; });
        const bool was_queued = in_queue_[c];
        h = mix(h, static_cast<std::uint64_t>(w) << 32 | static_cast<std::uint64_t>(c));
        int start = c;
        for (int i = c; i <= e; ++i) {
          if (i < e && (i == c || count_[p.lab[i]] == count_[p.lab[i - 1]])) continue;
          // fragment [start, i)
          p.cell_end[start] = i;
          for (int j = start; j < i; ++j) {
            p.cell[p.lab[j]] = start;
            p.pos[p.lab[j]] = j;
          }
          h = mix(h, static_cast<std::uint64_t>(count_[p.lab[start]]) << 32 |
                         static_cast<std::uint64_t>(i - start));
          if (start != c || !was_queued) {
            if (!in_queue_[start]) {
              queue.push_back(start);
              in_queue_[start] = 1;
            }
          }
          if (start != c) ++p.cells;
          start = i;
        }
      }
      for (int x : touched) count_[x] = 0;
    }
    return mix(h, static_cast<std::uint64_t>(p.cells));
  }

  static void individualize(Partition& p, int v) {
    const int c = p.cell[v];
    const int e = p.cell_end[c];
    const int pv = p.pos[v];
    std::swap(p.lab[c], p.lab[pv]);
    p.pos[p.lab[pv]] = pv;
    p.pos[v] = c;
    p.cell_end[c] = c + 1;
    p.cell_end[c + 1] = e;
    for (int j = c + 1; j < e; ++j) p.cell[p.lab[j]] = c + 1;
    ++p.cells;
  }

  static int target_cell(const Partition& p) {
    int best = -1, best_size = 0;
    for (int c = 0; c < static_cast<int>(p.lab.size()); c = p.cell_end[c]) {
      const int size = p.cell_end[c] - c;
      if (size > 1 && (best < 0 || size < best_size)) {
        best = c;
        best_size = size;
      }
    }
    return best;
  }

  std::vector<int> certificate(const Partition& p) const {
    std::vector<int> cert;
    cert.reserve(n_ + 2 * g_.size());
    std::vector<int> nb;
    for (int q = 0; q < n_; ++q) {
      const int v = p.lab[q];
      nb.clear();
      for (int x : g_.neighbors(v)) nb.push_back(p.pos[x]);
      std::sort(nb.begin(), nb.end());
      cert.push_back(static_cast<int>(nb.size()));
      cert.insert(cert.end(), nb.begin(), nb.end());
    }
    return cert;
  }

  std::vector<Permutation> generators_fixing(const std::vector<int>& path, std::size_t depth) const {
    std::vector<Permutation> out;
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (std::size_t i = 0; i < depth && fixes; ++i) fixes = gamma(path[i]) == path[i];
      if (fixes) out.push_back(gamma);
    }
    return out;
  }

  // Lexicographic comparison of the current hash prefix with another path's.
  int compare_prefix(const std::vector<std::uint64_t>& other) const {
    const std::size_t len = std::min(cur_hash_.size(), other.size());
    for (std::size_t i = 0; i < len; ++i)
      if (cur_hash_[i] != other[i]) return cur_hash_[i] < other[i] ? -1 : 1;
    if (cur_hash_.size() > other.size()) return 1;
    return 0;
  }

  bool equals_first_prefix() const {
    if (!have_first_) return true;
    if (cur_hash_.size() > first_hash_.size()) return false;
    return std::equal(cur_hash_.begin(), cur_hash_.end(), first_hash_.begin());
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t j = 0;
    while (j < a.size() && j < b.size() && a[j] == b[j]) ++j;
    return static_cast<int>(j);
  }

  void add_generator(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
    std::vector<int> images(n_);
    for (int q = 0; q < n_; ++q) images[from_lab[q]] = to_lab[q];
    Permutation gamma(std::move(images));
    if (!gamma.is_identity()) gens_.push_back(std::move(gamma));
  }

  bool should_prune() const {
    if (!have_first_) return false;
    if (equals_first_prefix()) return false;
    if (!opt_.canonical) return true;
    return compare_prefix(best_hash_) < 0;
  }

  // Returns the depth whose loop should continue; depth - 1 means "normal".
  int search(Partition& p, int depth) {
    if (++nodes_ > opt_.node_limit) throw GuardExceeded("automorphism search exceeded node limit");
    if (p.discrete()) return leaf(p, depth);

    const int c = target_cell(p);
    std::vector<int> children(p.lab.begin() + c, p.lab.begin() + p.cell_end[c]);
    std::sort(children.begin(), children.end());
    std::vector<int> explored;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    OrbitSet orb;
    for (int v : children) {
      if (!explored.empty()) {
        if (gens_seen != gens_.size()) {
          orb = orbits(n_, generators_fixing(cur_path_, depth));
          gens_seen = gens_.size();
        }
        const bool equivalent = std::any_of(explored.begin(), explored.end(), [&](int x) {
          return orb.orbit_of[x] == orb.orbit_of[v];
        });
        if (equivalent) continue;
      }
      explored.push_back(v);
      Partition child = p;
      individualize(child, v);
      const std::vector<int> splitter{child.cell[v]};
      const std::uint64_t h = mix(refine(child, splitter), static_cast<std::uint64_t>(child.pos[v]));
      cur_path_.push_back(v);
      cur_hash_.push_back(h);
      int ret = depth;
      if (!should_prune()) ret = search(child, depth + 1);
      cur_path_.pop_back();
      cur_hash_.pop_back();
      if (ret < depth) return ret;
    }
    return depth - 1;
  }

  int leaf(const Partition& p, int depth) {
    std::vector<int> cert = certificate(p);
    if (!have_first_) {
      have_first_ = true;
      first_path_ = best_path_ = cur_path_;
      first_hash_ = best_hash_ = cur_hash_;
      first_lab_ = best_lab_ = p.lab;
      first_cert_ = best_cert_ = std::move(cert);
      return depth - 1;
    }
    if (equals_first_prefix() && cert == first_cert_) {
      add_generator(first_lab_, p.lab);
      return divergence(cur_path_, first_path_);
    }
    if (!opt_.canonical) return depth - 1;
    int cmp = compare_prefix(best_hash_);
    if (cmp == 0) cmp = cert < best_cert_ ? -1 : (cert == best_cert_ ? 0 : 1);
    if (cmp > 0) {
      best_path_ = cur_path_;
      best_hash_ = cur_hash_;
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
      return depth - 1;
    }
    if (cmp == 0) {
      add_generator(best_lab_, p.lab);
      return divergence(cur_path_, best_path_);
    }
    return depth - 1;
  }

  const SimpleGraph& g_;
  const int n_;
  const SearchOptions opt_;
  std::vector<int> count_;
  std::vector<char> cell_mark_;
  std::vector<char> in_queue_;

  std::vector<Permutation> gens_;
  std::size_t nodes_ = 0;
  std::vector<int> cur_path_;
  std::vector<std::uint64_t> cur_hash_;

  bool have_first_ = false;
  std::vector<int> first_path_, best_path_;
  std::vector<std::uint64_t> first_hash_, best_hash_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<int> first_cert_, best_cert_;
};

}  // namespace

SearchResult search_automorphisms(const SimpleGraph& g, const SearchOptions& options) {
  Engine engine(g, options);
  return engine.run();
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& labeling) {
  SimpleGraph out(g.order());
  for (auto [a, b] : g.edges()) out.add_edge(labeling[a], labeling[b]);
  return out;
}

}  // namespace tricirc
