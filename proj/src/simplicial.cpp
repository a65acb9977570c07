#include "strateuler/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace strateuler {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("empty simplex");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i - 1] >= vertices_[i]) {
      throw std::invalid_argument("simplex vertices not strictly increasing: " +
                                  to_string());
    }
  }
  if (dim() > kMaxSimplexDim) {
    throw DimensionCapExceeded("simplex " + to_string() + " has dimension " +
                               std::to_string(dim()));
  }
}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Simplex(std::move(vertices));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
    std::vector<Vertex> v;
    v.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i != skip) v.push_back(vertices_[i]);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<Simplex> Simplex::faces() const {
  std::vector<Simplex> out;
  const std::size_t n = vertices_.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vertex> v;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) v.push_back(vertices_[i]);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i];
  }
  os << ']';
  return os.str();
}

std::vector<FaceGap> find_face_gaps(const std::set<Simplex>& simplices) {
  std::vector<FaceGap> gaps;
  for (const auto& s : simplices) {
    for (auto& f : s.facets()) {
      if (!simplices.count(f)) gaps.push_back({s, std::move(f)});
    }
  }
  return gaps;
}

void validate(const std::set<Simplex>& simplices) {
  const auto gaps = find_face_gaps(simplices);
  if (gaps.empty()) return;
  std::ostringstream os;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (i) os << "; ";
    os << gaps[i].simplex.to_string() << " missing face "
       << gaps[i].missing_face.to_string();
  }
  throw FaceClosureViolation(os.str());
}

SimplicialComplex::SimplicialComplex(std::set<Simplex> simplices)
    : simplices_(std::move(simplices)) {
  validate(simplices_);
}

SimplicialComplex SimplicialComplex::closure_of(
    const std::vector<Simplex>& generators) {
  std::set<Simplex> all;
  for (const auto& g : generators) {
    for (auto& f : g.faces()) all.insert(std::move(f));
  }
  return SimplicialComplex(std::move(all));
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices_) {
    if (s.dim() == 0) out.push_back(s.vertices().front());
  }
  return out;  // std::set order keeps these sorted
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, s.dim());
  return d;
}

Int SimplicialComplex::euler_characteristic() const {
  Int chi = 0;
  for (const auto& s : simplices_) chi += sign_power(s.dim());
  return chi;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::includes(other.simplices_.begin(), other.simplices_.end(),
                       simplices_.begin(), simplices_.end());
}

SimplexSubset::SimplexSubset(const SimplicialComplex& host,
                             std::set<Simplex> members)
    : host_(&host), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (!host.contains(m)) {
      throw MemberNotInHost(m.to_string() + " is not a simplex of the host");
    }
  }
}

SimplexSubset SimplexSubset::whole(const SimplicialComplex& host) {
  return SimplexSubset(host, host.simplices());
}

SimplexSubset SimplexSubset::closure() const {
  std::set<Simplex> closed;
  for (const auto& m : members_) {
    for (auto& f : m.faces()) closed.insert(std::move(f));
  }
  return SimplexSubset(*host_, std::move(closed));
}

bool SimplexSubset::is_face_closed() const {
  return find_face_gaps(members_).empty();
}

Int chi_c(const SimplexSubset& subset) {
  Int chi = 0;
  for (const auto& s : subset.members()) chi += sign_power(s.dim());
  return chi;
}

Int chi_rel(const SimplicialComplex& complex,
            const SimplicialComplex& boundary) {
  if (!boundary.is_subcomplex_of(complex)) {
    throw NotASubcomplex("boundary has simplices outside the complex");
  }
  return complex.euler_characteristic() - boundary.euler_characteristic();
}

SimplicialComplex product(const SimplicialComplex& a,
                          const SimplicialComplex& b) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  std::map<Vertex, Vertex> ia, ib;
  for (std::size_t i = 0; i < va.size(); ++i) ia[va[i]] = static_cast<Vertex>(i);
  for (std::size_t j = 0; j < vb.size(); ++j) ib[vb[j]] = static_cast<Vertex>(j);
  const Vertex nb = static_cast<Vertex>(vb.size());

  // Every top cell of sigma x tau is a monotone lattice path through the
  // vertex grid of the two simplices; faces come from the closure.
  std::vector<Simplex> cells;
  for (const auto& sigma : a.simplices()) {
    for (const auto& tau : b.simplices()) {
      const auto& sv = sigma.vertices();
      const auto& tv = tau.vertices();
      std::vector<Vertex> path;
      std::function<void(std::size_t, std::size_t)> walk =
          [&](std::size_t i, std::size_t j) {
            path.push_back(ia[sv[i]] * nb + ib[tv[j]]);
            if (i + 1 == sv.size() && j + 1 == tv.size()) {
              cells.push_back(Simplex::from_unsorted(path));
            } else {
              if (i + 1 < sv.size()) walk(i + 1, j);
              if (j + 1 < tv.size()) walk(i, j + 1);
            }
            path.pop_back();
          };
      walk(0, 0);
    }
  }
  return SimplicialComplex::closure_of(cells);
}

}  // namespace strateuler
