#include "marksmith/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace marksmith {

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

RatMat mat_zero(int rows, int cols) {
  return RatMat(rows, std::vector<Rat>(cols, Rat(0)));
}

RatMat mat_identity(int n) {
  RatMat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  int n = static_cast<int>(a.size());
  int k = n ? static_cast<int>(a[0].size()) : 0;
  if (k != static_cast<int>(b.size())) throw std::invalid_argument("mat_mul: shape mismatch");
  int m = b.empty() ? 0 : static_cast<int>(b[0].size());
  RatMat c = mat_zero(n, m);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

RatMat mat_transpose(const RatMat& a) {
  int n = static_cast<int>(a.size());
  int m = n ? static_cast<int>(a[0].size()) : 0;
  RatMat t = mat_zero(m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

RatMat mat_scale(const Rat& c, const RatMat& a) {
  RatMat r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

RatMat mat_inverse(const RatMat& a) {
  int n = static_cast<int>(a.size());
  RatMat work = a, inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    Rat p = work[col][col];
    for (int j = 0; j < n; ++j) { work[col][j] /= p; inv[col][j] /= p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      Rat f = work[r][col];
      for (int j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

int mat_rank(RatMat a) {
  int n = static_cast<int>(a.size());
  int m = n ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = 0; r < n; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[rank][col];
      for (int j = col; j < m; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Rat> row_times_mat(const std::vector<Rat>& v, const RatMat& a) {
  int k = static_cast<int>(v.size());
  if (k != static_cast<int>(a.size())) throw std::invalid_argument("row_times_mat: shape mismatch");
  int m = a.empty() ? 0 : static_cast<int>(a[0].size());
  std::vector<Rat> out(m, Rat(0));
  for (int l = 0; l < k; ++l) {
    if (v[l] == 0) continue;
    for (int j = 0; j < m; ++j) out[j] += v[l] * a[l][j];
  }
  return out;
}

LabeledMatrix LabeledMatrix::zero(std::vector<std::string> rows, std::vector<std::string> cols) {
  LabeledMatrix lm;
  lm.entries = mat_zero(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  lm.row_labels = std::move(rows);
  lm.col_labels = std::move(cols);
  return lm;
}

LabeledMatrix LabeledMatrix::identity(std::vector<std::string> labels) {
  LabeledMatrix lm;
  lm.entries = mat_identity(static_cast<int>(labels.size()));
  lm.row_labels = labels;
  lm.col_labels = std::move(labels);
  return lm;
}

LabeledMatrix LabeledMatrix::reordered(const std::vector<int>& perm) const {
  LabeledMatrix out;
  int n = rows();
  if (static_cast<int>(perm.size()) != n || n != cols())
    throw std::invalid_argument("reordered: needs a square matrix and a full permutation");
  out.entries = mat_zero(n, n);
  for (int i = 0; i < n; ++i) {
    out.row_labels.push_back(row_labels[perm[i]]);
    out.col_labels.push_back(col_labels[perm[i]]);
    for (int j = 0; j < n; ++j) out.entries[i][j] = entries[perm[i]][perm[j]];
  }
  return out;
}

LabeledMatrix lm_mul(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (a.col_labels != b.row_labels)
    throw std::invalid_argument("lm_mul: label order mismatch between factors");
  LabeledMatrix out;
  out.row_labels = a.row_labels;
  out.col_labels = b.col_labels;
  out.entries = mat_mul(a.entries, b.entries);
  return out;
}

int EquivalenceOnIndex::size() const {
  size_t n = 0;
  for (const auto& c : classes) n += c.size();
  return static_cast<int>(n);
}

std::vector<int> EquivalenceOnIndex::class_of_index() const {
  std::vector<int> out(size(), -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int i : classes[c]) out[i] = static_cast<int>(c);
  return out;
}

void EquivalenceOnIndex::validate() const {
  int n = size();
  std::vector<char> seen(n, 0);
  for (const auto& c : classes) {
    if (c.empty()) throw std::invalid_argument("EquivalenceOnIndex: empty class");
    for (int i : c) {
      if (i < 0 || i >= n || seen[i]) throw std::invalid_argument("EquivalenceOnIndex: malformed partition");
      seen[i] = 1;
    }
  }
  if (transversal.size() != classes.size())
    throw std::invalid_argument("EquivalenceOnIndex: transversal size mismatch");
  for (size_t c = 0; c < classes.size(); ++c)
    if (std::find(classes[c].begin(), classes[c].end(), transversal[c]) == classes[c].end())
      throw std::invalid_argument("EquivalenceOnIndex: transversal member outside its class");
}

std::pair<LabeledMatrix, LabeledMatrix> rc_matrices(const EquivalenceOnIndex& eq,
                                                    const std::vector<std::string>& index_labels) {
  eq.validate();
  int n = eq.size();
  std::vector<std::string> labels = index_labels;
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::string> tlabels;
  for (int t : eq.transversal) tlabels.push_back(labels[t]);

  LabeledMatrix r = LabeledMatrix::zero(tlabels, labels);
  LabeledMatrix c = LabeledMatrix::zero(labels, tlabels);
  for (int ci = 0; ci < eq.class_count(); ++ci) {
    for (int i : eq.classes[ci]) r.at(ci, i) = 1;
    c.at(eq.transversal[ci], ci) = 1;
  }
  return {r, c};
}

EquivalenceOnIndex pair_orbits(int n1, int n2, const PairAction& act) {
  EquivalenceOnIndex eq;
  std::vector<int> orbit_of(static_cast<size_t>(n1) * n2, -1);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      int p = i * n2 + j;
      if (orbit_of[p] != -1) continue;
      int id = static_cast<int>(eq.classes.size());
      std::vector<int> members{p};
      orbit_of[p] = id;
      for (size_t k = 0; k < members.size(); ++k) {
        int a = members[k] / n2, b = members[k] % n2;
        for (size_t g = 0; g < act.maps1.size(); ++g) {
          int q = act.maps1[g][a] * n2 + act.maps2[g][b];
          if (orbit_of[q] == -1) { orbit_of[q] = id; members.push_back(q); }
        }
      }
      std::sort(members.begin(), members.end());
      eq.classes.push_back(std::move(members));
      eq.transversal.push_back(p);
    }
  return eq;
}

bool action_compatible(const LabeledMatrix& a, const std::vector<std::vector<int>>& maps) {
  for (const auto& m : maps)
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        if (a.at(m[i], m[j]) != a.at(i, j)) return false;
  return true;
}

LabeledMatrix kron_over_group(const LabeledMatrix& a1, const LabeledMatrix& a2,
                              const PairAction& act,
                              const std::vector<int>* transversal_override,
                              std::vector<std::string> orbit_labels) {
  if (!action_compatible(a1, act.maps1) || !action_compatible(a2, act.maps2))
    throw std::invalid_argument("kron_over_group: matrix not compatible with the action");
  int n1 = a1.rows(), n2 = a2.rows();
  EquivalenceOnIndex eq = pair_orbits(n1, n2, act);
  if (transversal_override) {
    if (transversal_override->size() != eq.transversal.size())
      throw std::invalid_argument("kron_over_group: transversal size mismatch");
    eq.transversal = *transversal_override;
    eq.validate();
  }

  int k = eq.class_count();
  if (orbit_labels.empty())
    for (int c = 0; c < k; ++c) {
      int p = eq.transversal[c];
      orbit_labels.push_back(a1.row_labels[p / n2] + " . " + a2.row_labels[p % n2]);
    }
  LabeledMatrix out = LabeledMatrix::zero(orbit_labels, orbit_labels);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      int y1 = eq.transversal[c] / n2, y2 = eq.transversal[c] % n2;
      Rat sum(0);
      for (int p : eq.classes[r]) sum += a1.at(p / n2, y1) * a2.at(p % n2, y2);
      out.at(r, c) = sum;
    }
  return out;
}

}  // namespace marksmith
