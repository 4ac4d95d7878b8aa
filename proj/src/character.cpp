#include "sympieri/character.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "sympieri/branching.hpp"
#include "sympieri/oracle_guard.hpp"

namespace sympieri {

namespace {

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + ")";
}

// Weight multiset of tau^(r_1) (x) ... (x) tau^(r_k) for Sp_2: iterated
// convolution with the strings r, r-2, ..., -r.
std::map<int, long long> weight_string_product(const std::vector<int>& rho) {
  std::map<int, long long> acc{{0, 1}};
  for (int r : rho) {
    std::map<int, long long> next;
    for (const auto& [w, mult] : acc)
      for (int s = -r; s <= r; s += 2) next[w + s] += mult;
    acc = std::move(next);
  }
  return acc;
}

std::map<std::pair<std::vector<int>, int>, Character> character_cache;
std::mutex character_cache_mutex;

bool dominant(const Weight& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) return false;
    if (i > 0 && w[i] > w[i - 1]) return false;
  }
  return true;
}

}  // namespace

Character sp_character(const YoungDiagram& d, int n) {
  if (n < 0) throw std::invalid_argument("sp_character: rank must be nonnegative");
  if (d.depth() > n)
    throw std::invalid_argument("sp_character: depth(" + d.str() + ") exceeds rank " +
                                std::to_string(n));
  std::pair<std::vector<int>, int> key{d.rows(), n};
  {
    std::lock_guard<std::mutex> lock(character_cache_mutex);
    auto it = character_cache.find(key);
    if (it != character_cache.end()) return it->second;
  }
  Character out;
  if (n == 0) {
    out[{}] = 1;
  } else {
    for (const YoungDiagram& e : enumerate_down(d, n - 1)) {
      Character sub = sp_character(e, n - 1);
      std::map<int, long long> str = weight_string_product(rho_profile(d, e, n - 1));
      for (const auto& [w, mw] : sub)
        for (const auto& [s, ms] : str) {
          Weight key2 = w;
          key2.push_back(s);
          out[key2] += mw * ms;
        }
    }
  }
  std::lock_guard<std::mutex> lock(character_cache_mutex);
  return character_cache.emplace(std::move(key), std::move(out)).first->second;
}

long long sp_dim(const YoungDiagram& d, int n) {
  long long mass = 0;
  for (const auto& [w, mult] : sp_character(d, n)) mass += mult;
  return mass;
}

Decomposition decompose(const Character& c, int n) {
  Character work;
  for (const auto& [w, mult] : c) {
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("decompose: weight length " + std::to_string(w.size()) +
                                  " differs from rank " + std::to_string(n));
    if (mult != 0) work[w] = mult;
  }
  Decomposition out{n, {}};
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Weight lead = it->first;
    long long mult = it->second;
    if (mult < 0 || !dominant(lead))
      throw std::invalid_argument("not a character: leading weight " + weight_str(lead) +
                                  " has multiplicity " + std::to_string(mult));
    YoungDiagram f(lead);
    for (const auto& [w, mw] : sp_character(f, n)) {
      long long next = (work.count(w) ? work[w] : 0) - mult * mw;
      if (next == 0)
        work.erase(w);
      else
        work[w] = next;
    }
    out.add(f, mult);
  }
  return out;
}

Decomposition tensor_decompose(const YoungDiagram& d, const YoungDiagram& e, int m) {
  require_oracle_rank(m, "tensor_decompose");
  Character a = sp_character(d, m);
  Character b = sp_character(e, m);
  Character conv;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      Weight w(m);
      for (int i = 0; i < m; ++i) w[i] = wa[i] + wb[i];
      conv[w] += ma * mb;
    }
  return decompose(conv, m);
}

std::map<std::vector<YoungDiagram>, long long> restrict_decompose(const YoungDiagram& e, int n,
                                                                  const std::vector<int>& parts) {
  require_oracle_rank(n, "restrict_decompose");
  int total = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("restrict_decompose: ranks must be positive");
    total += p;
  }
  if (total != n)
    throw std::invalid_argument("restrict_decompose: ranks sum to " + std::to_string(total) +
                                ", expected " + std::to_string(n));
  Character work = sp_character(e, n);
  std::map<std::vector<YoungDiagram>, long long> out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Weight lead = it->first;
    long long mult = it->second;
    if (mult < 0)
      throw std::invalid_argument("not a character: leading weight " + weight_str(lead) +
                                  " has multiplicity " + std::to_string(mult));
    std::vector<YoungDiagram> tuple;
    std::size_t pos = 0;
    for (int p : parts) {
      Weight block(lead.begin() + pos, lead.begin() + pos + p);
      if (!dominant(block))
        throw std::invalid_argument("not a character: leading weight block " + weight_str(block) +
                                    " is not dominant");
      tuple.emplace_back(block);
      pos += p;
    }
    // Subtract mult copies of the product character of the blocks.
    Character prod{{{}, 1}};
    for (std::size_t b = 0; b < tuple.size(); ++b) {
      Character next;
      for (const auto& [pw, pm] : prod)
        for (const auto& [sw, sm] : sp_character(tuple[b], parts[b])) {
          Weight w = pw;
          w.insert(w.end(), sw.begin(), sw.end());
          next[w] += pm * sm;
        }
      prod = std::move(next);
    }
    for (const auto& [w, mw] : prod) {
      long long next = (work.count(w) ? work[w] : 0) - mult * mw;
      if (next == 0)
        work.erase(w);
      else
        work[w] = next;
    }
    out[tuple] += mult;
  }
  return out;
}

JointCharacter exterior_joint_character(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("exterior_joint_character: ranks must be positive");
  require_exterior_within_cap(n, m);
  JointCharacter acc{{{Weight(n, 0), Weight(m, 0)}, 1}};
  for (int i = 0; i < n; ++i)
    for (int sign : {+1, -1})
      for (int j = 0; j < m; ++j) {
        JointCharacter next;
        for (const auto& [key, mult] : acc) {
          next[key] += mult;
          std::pair<Weight, Weight> shifted = key;
          shifted.first[i] += sign;
          shifted.second[j] += 1;
          next[shifted] += mult;
        }
        acc = std::move(next);
      }
  JointCharacter out;
  for (const auto& [key, mult] : acc) {
    std::pair<Weight, Weight> shifted = key;
    for (int j = 0; j < m; ++j) shifted.second[j] -= n;
    out.emplace(std::move(shifted), mult);
  }
  return out;
}

}  // namespace sympieri
