#include "occ/virasoro.hpp"

#include <algorithm>
#include <mutex>

namespace occ::vir {

namespace {

using Term = std::map<std::vector<int>, cplx>;

void accumulate(Term& into, const Term& from, cplx scale) {
  for (const auto& [w, v] : from) into[w] += scale * v;
}

int word_weight(const std::vector<int>& w) {
  int s = 0;
  for (int p : w) s += p;
  return s;
}

void enumerate_partitions(int remaining, int max_part,
                          std::vector<int>& current,
                          std::vector<std::vector<int>>& out) {
  out.push_back(current);
  for (int p = std::min(max_part, remaining); p >= 2; --p) {
    current.push_back(p);
    enumerate_partitions(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

VacuumModule::VacuumModule(cplx c, int depth) : c_(c), depth_(depth) {
  if (depth < 2) throw Error(ErrorKind::kDomain, "vacuum module: depth < 2");
  std::vector<int> cur;
  std::vector<std::vector<int>> parts;
  enumerate_partitions(depth, depth, cur, parts);
  std::sort(parts.begin(), parts.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int wa = word_weight(a), wb = word_weight(b);
              if (wa != wb) return wa < wb;
              return a < b;
            });
  basis_ = std::move(parts);
  for (size_t i = 0; i < basis_.size(); ++i) {
    weights_.push_back(word_weight(basis_[i]));
    index_[basis_[i]] = static_cast<int>(i);
  }
  for (int n = -depth; n <= depth; ++n) {
    Mat m = Mat::Zero(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
      Term t = apply_l(n, basis_[j]);
      for (const auto& [w, v] : t) {
        auto it = index_.find(w);
        if (it != index_.end()) m(it->second, j) += v;
      }
    }
    lmats_[n] = std::move(m);
  }
}

Term VacuumModule::insert_creation(int b, const std::vector<int>& word) const {
  // Normal-orders L(-b) into a descending word using
  // [L(-b), L(-a)] = (a - b) L(-(a+b)).
  Term out;
  if (word_weight(word) + b > depth_) return out;
  if (word.empty() || b >= word.front()) {
    std::vector<int> w;
    w.reserve(word.size() + 1);
    w.push_back(b);
    w.insert(w.end(), word.begin(), word.end());
    out[w] = cplx(1);
    return out;
  }
  int a = word.front();
  std::vector<int> rest(word.begin() + 1, word.end());
  Term deeper = insert_creation(b, rest);
  for (const auto& [w, v] : deeper) {
    Term reordered = insert_creation(a, w);
    accumulate(out, reordered, v);
  }
  Term merged = insert_creation(a + b, rest);
  accumulate(out, merged, cplx(a - b, 0));
  return out;
}

Term VacuumModule::apply_l(int m, const std::vector<int>& word) const {
  Term out;
  if (m <= -2) return insert_creation(-m, word);
  if (word.empty()) return out;  // L(m)|0> = 0 for m >= -1
  if (m == 0) {
    out[word] = cplx(word_weight(word), 0);
    return out;
  }
  int a = word.front();
  std::vector<int> rest(word.begin() + 1, word.end());
  // L(m) L(-a) = L(-a) L(m) + (m + a) L(m - a) + (c/12)(m^3 - m) delta_{m,a}
  Term commuted = apply_l(m, rest);
  for (const auto& [w, v] : commuted)
    accumulate(out, insert_creation(a, w), v);
  Term lowered = apply_l(m - a, rest);
  accumulate(out, lowered, cplx(m + a, 0));
  if (m == a) {
    double central = (static_cast<double>(m) * m * m - m) / 12.0;
    Term id;
    if (word_weight(rest) <= depth_) id[rest] = cplx(1);
    accumulate(out, id, c_ * central);
  }
  return out;
}

const Mat& VacuumModule::l(int n) const {
  auto it = lmats_.find(n);
  if (it == lmats_.end())
    throw Error(ErrorKind::kDomain, "l(n): |n| beyond module depth");
  return it->second;
}

Mat VacuumModule::exp_l(const std::vector<cplx>& A, int sign) const {
  Mat gen = Mat::Zero(dim(), dim());
  for (int j = 1; j <= depth_ && j <= static_cast<int>(A.size()); ++j)
    if (A[j - 1] != cplx(0)) gen += -A[j - 1] * l(sign * j);
  Mat result = Mat::Identity(dim(), dim());
  Mat term = Mat::Identity(dim(), dim());
  for (int n = 1; n <= dim() + 1; ++n) {
    term = (gen * term) / cplx(n, 0);
    double norm = term.cwiseAbs().maxCoeff();
    if (norm == 0.0) break;
    result += term;
    if (norm < 1e-300) break;
  }
  return result;
}

Mat VacuumModule::l0_scale(cplx a0) const {
  if (a0 == cplx(0))
    throw Error(ErrorKind::kInvalidCoordinate, "l0_scale: a0 = 0");
  Mat d = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    d(i, i) = pow_branch(a0, cplx(-weights_[i], 0));
  return d;
}

cplx VacuumModule::vacuum_amplitude(const std::vector<cplx>& A,
                                    const std::vector<cplx>& B,
                                    cplx a0) const {
  Vec v = Vec::Zero(dim());
  v(0) = cplx(1);
  v = exp_l(B, -1) * v;
  v = l0_scale(a0) * v;
  v = exp_l(A, +1) * v;
  return v(0);
}

const VacuumModule& vacuum_module(cplx c, int depth) {
  static std::mutex mu;
  static std::map<std::pair<std::pair<double, double>, int>, VacuumModule>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(std::make_pair(c.real(), c.imag()), depth);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, VacuumModule(c, depth)).first;
  return it->second;
}

}  // namespace occ::vir
