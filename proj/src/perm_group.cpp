#include "braidmon/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidmon {

PermGroup::PermGroup(int degree) : degree_(degree) {}

PermGroup PermGroup::from_generators(const std::vector<Perm>& gens, int degree) {
  int deg = degree;
  for (const auto& g : gens) {
    if (deg < 0) deg = g.degree();
    if (g.degree() != deg)
      throw std::invalid_argument("PermGroup: mismatched degrees");
  }
  if (deg < 0) deg = 0;
  PermGroup G(deg);
  for (const auto& g : gens)
    if (!g.is_identity()) G.gens_.push_back(g);
  G.build();
  return G;
}

void PermGroup::recompute_orbit(size_t i) {
  orbit_[i].clear();
  transversal_[i].assign(degree_, std::nullopt);
  int b = base_[i];
  orbit_[i].push_back(b);
  transversal_[i][b] = Perm::identity(degree_);
  for (size_t oi = 0; oi < orbit_[i].size(); ++oi) {
    int x = orbit_[i][oi];
    for (const auto& g : strong_[i]) {
      int y = g(x);
      if (!transversal_[i][y]) {
        transversal_[i][y] = transversal_[i][x]->then(g);
        orbit_[i].push_back(y);
      }
    }
  }
}

std::pair<Perm, size_t> PermGroup::strip(const Perm& g, size_t from) const {
  Perm h = g;
  for (size_t i = from; i < base_.size(); ++i) {
    int x = h(base_[i]);
    if (!transversal_[i][x]) return {h, i};
    h = h.then(transversal_[i][x]->inverse());
  }
  return {h, base_.size()};
}

void PermGroup::build() {
  base_.clear();
  strong_.clear();
  orbit_.clear();
  transversal_.clear();
  if (gens_.empty()) return;

  // initial base: every generator must move some base point
  auto ensure_moved = [&](const Perm& g) {
    for (int b : base_)
      if (g(b) != b) return;
    for (int i = 0; i < degree_; ++i)
      if (g(i) != i) {
        base_.push_back(i);
        strong_.emplace_back();
        orbit_.emplace_back();
        transversal_.emplace_back();
        break;
      }
  };
  for (const auto& g : gens_) ensure_moved(g);
  // level i holds the generators fixing base_[0..i-1]
  for (const auto& g : gens_)
    for (size_t i = 0; i < base_.size(); ++i) {
      bool fixes = true;
      for (size_t j = 0; j < i; ++j)
        if (g(base_[j]) != base_[j]) { fixes = false; break; }
      if (fixes) strong_[i].push_back(g);
    }
  for (size_t i = 0; i < base_.size(); ++i) recompute_orbit(i);

  // bottom-up Schreier-Sims
  size_t i = base_.size();
  while (i >= 1) {
    size_t lev = i - 1;
    bool restart = false;
    for (size_t oi = 0; oi < orbit_[lev].size() && !restart; ++oi) {
      int x = orbit_[lev][oi];
      for (const auto& s : strong_[lev]) {
        const Perm& ux = *transversal_[lev][x];
        const Perm& uxs = *transversal_[lev][s(x)];
        Perm schreier = ux.then(s).then(uxs.inverse());
        auto [h, j] = strip(schreier, lev + 1);
        if (h.is_identity()) continue;
        if (j == base_.size()) {
          // extend the base by a point h moves
          for (int p = 0; p < degree_; ++p)
            if (h(p) != p) {
              base_.push_back(p);
              strong_.emplace_back();
              orbit_.emplace_back();
              transversal_.emplace_back();
              break;
            }
        }
        for (size_t l = lev + 1; l <= j && l < base_.size(); ++l) {
          strong_[l].push_back(h);
          recompute_orbit(l);
        }
        i = j + 1;
        restart = true;
        break;
      }
    }
    if (!restart) i = lev;
  }
}

unsigned long long PermGroup::order() const {
  unsigned long long o = 1;
  for (const auto& orb : orbit_) o *= (unsigned long long)orb.size();
  return o;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("PermGroup::contains: degree mismatch");
  auto [residue, lev] = strip(p, 0);
  (void)lev;
  return residue.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_)
    throw std::invalid_argument("PermGroup: degree mismatch");
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::equals(const PermGroup& other) const {
  if (degree_ != other.degree_)
    throw std::invalid_argument("PermGroup: degree mismatch");
  return order() == other.order() && is_subgroup_of(other);
}

Perm WreathGround::phase_rotation() const {
  std::vector<int> img(N);
  for (long long b = 0; b < blocks(); ++b)
    for (long long p = 0; p < d; ++p)
      img[b * d + p] = (int)(b * d + (p + 1) % d);
  return Perm(img);
}

bool is_d_equivariant(const Perm& sigma, const WreathGround& w) {
  if (sigma.degree() != w.N) return false;
  Perm r = w.phase_rotation();
  return sigma.then(r) == r.then(sigma);
}

long long ind_sigma(const Perm& sigma, const WreathGround& w) {
  if (!is_d_equivariant(sigma, w))
    throw std::invalid_argument("not d-equivariant");
  long long sum = 0;
  for (long long b = 0; b < w.blocks(); ++b) {
    int image = sigma((int)(b * w.d)); // image of the phase-0 point of block b
    sum += image % w.d;
  }
  return ((sum % w.d) + w.d) % w.d;
}

std::vector<Perm> wreath_subgroup_generators(long long N, long long d, long long g) {
  if (d <= 0 || N <= 0 || N % d != 0)
    throw std::invalid_argument("wreath_subgroup_generators: need d | N");
  if (g <= 0 || d % g != 0)
    throw std::invalid_argument("wreath_subgroup_generators: need g | d");
  long long B = N / d;
  std::vector<Perm> gens;

  auto phase_shift = [&](long long block, long long amount) {
    std::vector<int> img(N);
    std::iota(img.begin(), img.end(), 0);
    for (long long p = 0; p < d; ++p)
      img[block * d + p] = (int)(block * d + (p + amount) % d);
    return Perm(img);
  };

  // adjacent block transpositions, phase preserved
  for (long long b = 0; b + 1 < B; ++b) {
    std::vector<int> img(N);
    std::iota(img.begin(), img.end(), 0);
    for (long long p = 0; p < d; ++p) {
      img[b * d + p] = (int)((b + 1) * d + p);
      img[(b + 1) * d + p] = (int)(b * d + p);
    }
    gens.emplace_back(img);
  }
  // paired phases: +1 on block 0, -1 on block 1 (net ind 0)
  if (d > 1 && B >= 2)
    gens.push_back(phase_shift(0, 1).then(phase_shift(1, d - 1)));
  // +g phase on block 0 (ind g); identity when g = d
  if (g % d != 0) gens.push_back(phase_shift(0, g % d));

  return gens;
}

unsigned long long wreath_subgroup_order(long long N, long long d, long long g) {
  long long B = N / d;
  unsigned long long o = 1;
  for (long long i = 0; i + 1 < B; ++i) o *= (unsigned long long)d;
  o *= (unsigned long long)(d / g);
  for (long long i = 2; i <= B; ++i) o *= (unsigned long long)i;
  return o;
}

std::vector<Perm> filter_sn(int n, const std::function<bool(const Perm&)>& pred,
                            bool parallel) {
  unsigned long long total = 1;
  for (int i = 2; i <= n; ++i) total *= (unsigned long long)i;

  auto unrank = [n, total](unsigned long long rank) {
    std::vector<int> avail(n), img(n);
    std::iota(avail.begin(), avail.end(), 0);
    unsigned long long f = total;
    for (int i = 0; i < n; ++i) {
      f /= (unsigned long long)(n - i);
      int idx = (int)(rank / f);
      rank %= f;
      img[i] = avail[idx];
      avail.erase(avail.begin() + idx);
    }
    return Perm(img);
  };

  std::vector<std::vector<Perm>> buckets;
#ifdef _OPENMP
  if (parallel) {
    int nt = omp_get_max_threads();
    buckets.resize(nt);
#pragma omp parallel
    {
      int tid = omp_get_thread_num();
#pragma omp for schedule(static)
      for (long long r = 0; r < (long long)total; ++r) {
        Perm p = unrank((unsigned long long)r);
        if (pred(p)) buckets[tid].push_back(p);
      }
    }
  } else
#endif
  {
    buckets.resize(1);
    for (unsigned long long r = 0; r < total; ++r) {
      Perm p = unrank(r);
      if (pred(p)) buckets[0].push_back(p);
    }
  }
  std::vector<Perm> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace braidmon
