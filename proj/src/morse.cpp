#include "vth/morse.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "vth/constructions.hpp"
#include "vth/errors.hpp"

namespace vth {

namespace {

// Dense ids for the faces of a complex: id = offset[dim] + rank within dim.
class FaceIndex {
 public:
  explicit FaceIndex(std::vector<std::vector<Simplex>> faces) : faces_(std::move(faces)) {
    std::size_t total = 0;
    for (const auto& layer : faces_) {
      offset_.push_back(total);
      total += layer.size();
    }
    size_ = total;
  }

  std::size_t size() const { return size_; }
  const std::vector<std::vector<Simplex>>& layers() const { return faces_; }

  std::size_t id(const Simplex& s) const {
    if (s.empty() || s.size() > faces_.size()) return npos;
    const auto& layer = faces_[s.size() - 1];
    auto it = std::lower_bound(layer.begin(), layer.end(), s);
    if (it == layer.end() || *it != s) return npos;
    return offset_[s.size() - 1] + static_cast<std::size_t>(it - layer.begin());
  }

  static constexpr std::size_t npos = SIZE_MAX;

 private:
  std::vector<std::vector<Simplex>> faces_;
  std::vector<std::size_t> offset_;
  std::size_t size_ = 0;
};

bool is_codim_one(const Simplex& sigma, const Simplex& tau) {
  return tau.size() == sigma.size() + 1 && is_subset(sigma, tau);
}

// partner[id] for every face, or nullopt if `m` is not a matching on `index`.
std::optional<std::vector<std::size_t>> partners(const FaceIndex& index, const AcyclicMatching& m) {
  std::vector<std::size_t> partner(index.size(), FaceIndex::npos);
  for (const auto& [sigma, tau] : m.pairs) {
    const std::size_t a = index.id(sigma), b = index.id(tau);
    if (a == FaceIndex::npos || b == FaceIndex::npos || !is_codim_one(sigma, tau)) return std::nullopt;
    if (partner[a] != FaceIndex::npos || partner[b] != FaceIndex::npos) return std::nullopt;
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

bool acyclic(const FaceIndex& index, const std::vector<std::size_t>& partner) {
  std::vector<std::vector<std::size_t>> out(index.size());
  std::vector<std::size_t> indegree(index.size(), 0);
  Simplex sub;
  for (const auto& layer : index.layers()) {
    for (const auto& tau : layer) {
      if (tau.size() < 2) continue;
      const std::size_t t = index.id(tau);
      for (std::size_t j = 0; j < tau.size(); ++j) {
        sub.assign(tau.begin(), tau.end());
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
        const std::size_t s = index.id(sub);
        if (partner[s] == t) out[s].push_back(t);
        else out[t].push_back(s);
      }
    }
  }
  for (const auto& edges : out)
    for (std::size_t w : edges) ++indegree[w];
  std::queue<std::size_t> ready;
  for (std::size_t v = 0; v < index.size(); ++v)
    if (indegree[v] == 0) ready.push(v);
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop();
    ++visited;
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  return visited == index.size();
}

}  // namespace

bool is_acyclic_matching(const SimplicialComplex& k, const AcyclicMatching& m, std::size_t face_cap) {
  const FaceIndex index(k.faces(face_cap));
  const auto partner = partners(index, m);
  return partner && acyclic(index, *partner);
}

std::vector<std::vector<Simplex>> critical_faces(const SimplicialComplex& k, const AcyclicMatching& m,
                                                 std::size_t face_cap) {
  const FaceIndex index(k.faces(face_cap));
  const auto partner = partners(index, m);
  if (!partner) throw VerificationError("not a matching on the faces of the complex");
  std::vector<std::vector<Simplex>> out;
  for (const auto& layer : index.layers()) {
    out.emplace_back();
    for (const auto& s : layer)
      if ((*partner)[index.id(s)] == FaceIndex::npos) out.back().push_back(s);
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

AcyclicMatching neighbourhood_matching(const Graph& g, const ClusterDecomposition& d, std::size_t face_cap) {
  const SimplicialComplex complex = closed_neighbourhood_complex(g);
  const FaceIndex index(complex.faces(face_cap));

  std::map<Vertex, std::vector<std::size_t>> parts_of;
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    for (Vertex v : d.parts[i]) parts_of[v].push_back(i);

  auto closed_nbhd = [&](Vertex v) {
    Simplex s = g.neighbours(v);
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
  };
  // v with sigma in N[v], i.e. the intersection of N[u] over u in sigma.
  auto dominators = [&](const Simplex& sigma) {
    Simplex acc = closed_nbhd(sigma.front());
    for (std::size_t i = 1; i < sigma.size() && !acc.empty(); ++i) {
      const Simplex next = closed_nbhd(sigma[i]);
      Simplex meet;
      std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(), std::back_inserter(meet));
      acc = std::move(meet);
    }
    return acc;
  };
  auto containing_part = [&](const Simplex& sigma) -> std::optional<std::size_t> {
    auto it = parts_of.find(sigma.front());
    if (it == parts_of.end()) return std::nullopt;
    for (std::size_t i : it->second)
      if (is_subset(sigma, d.parts[i])) return i;
    return std::nullopt;
  };

  AcyclicMatching m;
  for (const auto& layer : index.layers()) {
    for (const auto& sigma : layer) {
      const auto dom = dominators(sigma);
      if (auto part = containing_part(sigma)) {
        if (sigma.size() < 2) continue;
        for (Vertex v : dom)
          if (!std::binary_search(d.parts[*part].begin(), d.parts[*part].end(), v))
            throw VerificationError("face inside part " + std::to_string(*part) + " is dominated by outside vertex " +
                                    std::to_string(v));
        continue;
      }
      if (dom.size() != 1)
        throw VerificationError("face spanning several parts has " + std::to_string(dom.size()) +
                                " dominating vertices");
      const Vertex v = dom.front();
      if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
      Simplex tau = sigma;
      tau.insert(std::lower_bound(tau.begin(), tau.end(), v), v);
      m.pairs.emplace_back(sigma, std::move(tau));
    }
  }
  const auto partner = partners(index, m);
  if (!partner || !acyclic(index, *partner)) throw VerificationError("neighbourhood matching is not acyclic");
  return m;
}

SimplicialComplex collapse_critical(const SimplicialComplex& k, const AcyclicMatching& m, std::size_t face_cap) {
  if (m.pairs.empty()) return k;
  const FaceIndex index(k.faces(face_cap));
  const auto partner = partners(index, m);
  if (!partner || !acyclic(index, *partner)) throw VerificationError("matching is not acyclic");
  std::vector<Simplex> critical;
  Simplex sub;
  for (const auto& layer : index.layers())
    for (const auto& s : layer) {
      if ((*partner)[index.id(s)] != FaceIndex::npos) continue;
      if (s.size() > 1)
        for (std::size_t j = 0; j < s.size(); ++j) {
          sub.assign(s.begin(), s.end());
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
          if ((*partner)[index.id(sub)] != FaceIndex::npos)
            throw VerificationError("critical faces do not form a subcomplex");
        }
      critical.push_back(s);
    }
  return SimplicialComplex::from_facets(std::move(critical));
}

AcyclicMatching star_matching(Vertex apex, std::span<const std::vector<Vertex>> blocks) {
  std::vector<std::pair<Vertex, std::size_t>> labelled;  // vertex -> block
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Vertex v : blocks[b]) {
      if (v == apex) throw std::invalid_argument("apex may not lie in a block");
      labelled.emplace_back(v, b);
    }
  std::sort(labelled.begin(), labelled.end());
  if (labelled.size() > 30) throw CapExceeded("star_matching supports at most 30 block vertices");
  AcyclicMatching m;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << labelled.size()); ++mask) {
    Simplex sigma;
    std::size_t first_block = SIZE_MAX;
    bool spans = false;
    for (std::size_t i = 0; i < labelled.size(); ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      sigma.push_back(labelled[i].first);
      if (first_block == SIZE_MAX) first_block = labelled[i].second;
      else if (labelled[i].second != first_block) spans = true;
    }
    if (!spans) continue;
    Simplex tau = sigma;
    tau.insert(std::lower_bound(tau.begin(), tau.end(), apex), apex);
    m.pairs.emplace_back(std::move(sigma), std::move(tau));
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

}  // namespace vth
