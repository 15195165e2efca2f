#include "braidmon/braid.hpp"

#include <numeric>
#include <stdexcept>

namespace braidmon {

AnnularBraidWord AnnularBraidWord::tau(int n, int exponent) {
  AnnularBraidWord w(n);
  int s = exponent >= 0 ? 1 : -1;
  for (int i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
    w.push({0, s});
  return w;
}

AnnularBraidWord AnnularBraidWord::b(int n, int j, int exponent) {
  if (j < 1 || j > n)
    throw std::invalid_argument("braid generator index out of range");
  AnnularBraidWord w(n);
  int s = exponent >= 0 ? 1 : -1;
  for (int i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
    w.push({j, s});
  return w;
}

void AnnularBraidWord::push(BraidLetter l) {
  if (!letters_.empty() && letters_.back().gen == l.gen &&
      letters_.back().sign == -l.sign) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

AnnularBraidWord AnnularBraidWord::inverse() const {
  AnnularBraidWord w(strands_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.push({it->gen, -it->sign});
  return w;
}

AnnularBraidWord compose(const AnnularBraidWord& u, const AnnularBraidWord& v) {
  if (u.strands_ != v.strands_)
    throw std::invalid_argument("braid compose: strand mismatch");
  AnnularBraidWord w(u.strands_);
  for (const auto& l : u.letters_) w.push(l);
  for (const auto& l : v.letters_) w.push(l);
  return w;
}

Perm AnnularBraidWord::permutation() const {
  int n = strands_;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  Perm acc(img);
  // pi(w) = pi(l_1) o pi(l_2) o ... applied right-to-left, so that
  // tau b_j tau^{-1} = b_{j+1} projects correctly.
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    if (it->gen == 0) {
      for (int i = 0; i < n; ++i)
        m[i] = it->sign > 0 ? (i + 1) % n : (i + n - 1) % n;
    } else {
      int a = it->gen - 1, b = it->gen % n;
      m[a] = b;
      m[b] = a;
    }
    acc = acc.then(Perm(m));
  }
  return acc;
}

long long AnnularBraidWord::ind() const {
  long long s = 0;
  for (const auto& l : letters_)
    if (l.gen == 0) s += l.sign;
  return s;
}

std::string AnnularBraidWord::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  size_t i = 0;
  while (i < letters_.size()) {
    size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long e = (long long)(j - i) * letters_[i].sign;
    if (!out.empty()) out += " ";
    out += letters_[i].gen == 0 ? "t" : "b" + std::to_string(letters_[i].gen);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

namespace {

// Free words on x_1..x_N (letters +-1..+-N) and z (+-(N+1)), reduced.
using FreeWord = std::vector<int>;

void fpush(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) {
    w.pop_back();
    return;
  }
  w.push_back(letter);
}

void fappend(FreeWord& w, const FreeWord& v, bool invert = false) {
  if (!invert) {
    for (int l : v) fpush(w, l);
  } else {
    for (auto it = v.rbegin(); it != v.rend(); ++it) fpush(w, -*it);
  }
}

// Image of a single free letter under one positive/negative braid
// generator on n strands (gen 0 = tau, 1..n-1 = Artin b_i; b_n handled
// by the caller via tau b_{n-1} tau^{-1}).
FreeWord letter_image(int n, int gen, int sign, int fletter) {
  int g = fletter > 0 ? fletter : -fletter;
  int z = n + 1;
  FreeWord out;
  auto emit = [&](std::initializer_list<int> ls) {
    for (int l : ls) fpush(out, l);
  };
  if (g == z) {
    emit({fletter});
    return out;
  }
  if (gen == 0) {
    if (sign > 0) { // tau: x_i -> x_{i+1}, x_n -> z x_1 z^{-1}
      if (g < n) emit({g + 1});
      else emit({z, 1, -z});
    } else {        // tau^{-1}: x_i -> x_{i-1}, x_1 -> z^{-1} x_n z
      if (g > 1) emit({g - 1});
      else emit({-z, n, z});
    }
    if (fletter < 0) { // invert the image word
      FreeWord inv;
      fappend(inv, out, true);
      return inv;
    }
    return out;
  }
  // Artin b_i, 1 <= i <= n-1
  int i = gen;
  if (sign > 0) {
    if (g == i) emit({i, i + 1, -i});
    else if (g == i + 1) emit({i});
    else emit({g});
  } else {
    if (g == i) emit({i + 1});
    else if (g == i + 1) emit({-(i + 1), i, i + 1});
    else emit({g});
  }
  if (fletter < 0) {
    FreeWord inv;
    fappend(inv, out, true);
    return inv;
  }
  return out;
}

FreeWord apply_generator(int n, int gen, int sign, const FreeWord& w) {
  FreeWord out;
  for (int l : w) {
    FreeWord img = letter_image(n, gen, sign, l);
    fappend(out, img);
  }
  return out;
}

// apply one braid letter, expanding b_n = tau b_{n-1} tau^{-1}
FreeWord apply_letter(int n, BraidLetter l, FreeWord w) {
  if (l.gen == n && n >= 2) {
    // phi_{b_n} = phi_tau o phi_{b_{n-1}} o phi_{tau^{-1}}
    w = apply_generator(n, 0, -1, w);
    w = apply_generator(n, n - 1, l.sign, w);
    w = apply_generator(n, 0, 1, w);
    return w;
  }
  if (l.gen == n && n == 1)
    throw std::invalid_argument("b_1 undefined on a single strand");
  return apply_generator(n, l.gen, l.sign, w);
}

} // namespace

std::vector<int> free_image(const AnnularBraidWord& w, int generator) {
  int n = w.strands();
  if (generator < 1 || generator > n + 1)
    throw std::invalid_argument("free generator out of range");
  FreeWord cur{generator};
  // homomorphism convention: A(uv) = A(u) o A(v), so apply letters
  // right-to-left
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it)
    cur = apply_letter(n, *it, cur);
  return cur;
}

bool braid_equal(const AnnularBraidWord& u, const AnnularBraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("braid_equal: strand mismatch");
  if (u.ind() != v.ind()) return false;
  if (!(u.permutation() == v.permutation())) return false;
  for (int g = 1; g <= u.strands() + 1; ++g)
    if (free_image(u, g) != free_image(v, g)) return false;
  return true;
}

AnnularBraidWord f_embed(const AnnularBraidWord& u, long long d) {
  if (d <= 0) throw std::invalid_argument("f_embed: d must be positive");
  if (d == 1) return u;
  int nd = u.strands();      // N/d strands downstairs
  int N = (int)(nd * d);     // upstairs
  AnnularBraidWord out(N);
  for (const auto& l : u.letters()) {
    if (l.gen == 0) {
      out.push({0, l.sign});
    } else {
      if (nd < 2)
        throw std::invalid_argument("f_embed: no b-generators on one strand");
      for (long long c = 0; c < d; ++c) {
        int j = (int)((l.gen - 1 + c * nd) % N) + 1;
        out.push({j, l.sign});
      }
    }
  }
  return out;
}

} // namespace braidmon
