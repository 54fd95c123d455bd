#include "weyl_lanke/combinatorics.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wl::comb {

namespace {

void strip_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  return value;
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  strip_zeros(parts_);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> cols(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[j];
  return Partition(std::move(cols));
}

bool Partition::dominates(const Partition& other) const {
  int a = 0, b = 0;
  const int len = std::max(length(), other.length());
  for (int i = 0; i < len; ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return a == b;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    parts.push_back(parse_int(piece, "partition part"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int m, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(current.size()) >= max_parts) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, m, m);
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------------- rows

RowCounts parse_row(std::string_view text) {
  text = trim(text);
  RowCounts row;
  if (text.empty() || text == "()") return row;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto caret = token.find('^');
    int letter = parse_int(std::string_view(token).substr(0, caret), "letter");
    int exp = caret == std::string::npos ? 1 : parse_int(std::string_view(token).substr(caret + 1), "exponent");
    if (letter < 1) throw std::invalid_argument("letters start at 1");
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (static_cast<int>(row.size()) < letter) row.resize(letter, 0);
    row[letter - 1] += exp;
  }
  strip_zeros(row);
  return row;
}

std::string format_row(const RowCounts& row) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(j + 1);
    if (row[j] != 1) out += '^' + std::to_string(row[j]);
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------- Tableau

Tableau::Tableau(std::vector<RowCounts> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (auto& r : rows_) {
    for (int c : r)
      if (c < 0) throw std::invalid_argument("negative entry count");
    strip_zeros(r);
    lengths.push_back(std::accumulate(r.begin(), r.end(), 0));
  }
  while (!rows_.empty() && lengths.back() == 0) {
    rows_.pop_back();
    lengths.pop_back();
  }
  shape_ = Partition(lengths);
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    for (std::size_t j = 0; j < it->size(); ++j)
      for (int k = 0; k < (*it)[j]; ++k) word_.push_back(static_cast<int>(j) + 1);
}

int Tableau::count(int row, int letter) const {
  if (row < 0 || row >= row_count() || letter < 1) return 0;
  const auto& r = rows_[row];
  return letter <= static_cast<int>(r.size()) ? r[letter - 1] : 0;
}

int Tableau::max_letter() const {
  int m = 0;
  for (const auto& r : rows_) m = std::max(m, static_cast<int>(r.size()));
  return m;
}

std::vector<int> Tableau::weight() const {
  std::vector<int> w(max_letter(), 0);
  for (const auto& r : rows_)
    for (std::size_t j = 0; j < r.size(); ++j) w[j] += r[j];
  strip_zeros(w);
  return w;
}

bool Tableau::is_semistandard() const {
  const int letters = max_letter();
  for (int i = 1; i < row_count(); ++i) {
    int below = 0, above_strict = 0;
    for (int j = 1; j <= letters; ++j) {
      below += count(i, j);
      if (below > above_strict) return false;
      above_strict += count(i - 1, j);
    }
  }
  return true;
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += " / ";
    out += format_row(rows_[i]);
  }
  return out;
}

Tableau Tableau::parse(std::string_view text) {
  std::vector<RowCounts> rows;
  std::size_t start = 0;
  while (true) {
    auto slash = text.find('/', start);
    rows.push_back(parse_row(text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start)));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return Tableau(std::move(rows));
}

Tableau superstandard(const Partition& mu) {
  std::vector<RowCounts> rows;
  for (int i = 0; i < mu.length(); ++i) {
    RowCounts r(i + 1, 0);
    r[i] = mu[i];
    rows.push_back(std::move(r));
  }
  return Tableau(std::move(rows));
}

// ------------------------------------------------------------ enumeration

std::vector<Tableau> enumerate_sst(const Partition& shape, const std::vector<int>& weight) {
  std::vector<Tableau> out;
  const int letters = static_cast<int>(weight.size());
  const int nrows = shape.length();
  if (std::accumulate(weight.begin(), weight.end(), 0) != shape.size()) return out;
  if (nrows == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> remaining = weight;
  std::vector<RowCounts> rows(nrows, RowCounts(letters, 0));

  // Fill row i letter by letter; prefix sums enforce column strictness.
  auto fill = [&](auto&& self, int i, int j, int used, int above_strict) -> void {
    if (j == letters) {
      if (used != shape[i]) return;
      if (i + 1 == nrows) {
        out.emplace_back(rows);
        return;
      }
      self(self, i + 1, 0, 0, 0);
      return;
    }
    const int prev_row_below = i > 0 ? rows[i - 1][j] : 0;
    int hi = std::min(remaining[j], shape[i] - used);
    if (i > 0) hi = std::min(hi, above_strict - used);
    if (i + 1 == nrows) {
      // last row must absorb whatever is left
      if (remaining[j] > hi) return;
      hi = remaining[j];
    }
    for (int c = hi; c >= 0; --c) {
      rows[i][j] = c;
      remaining[j] -= c;
      self(self, i, j + 1, used + c, above_strict + prev_row_below);
      remaining[j] += c;
    }
    rows[i][j] = 0;
  };
  fill(fill, 0, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t kostka(const Partition& shape, const std::vector<int>& weight) {
  return static_cast<std::int64_t>(enumerate_sst(shape, weight).size());
}

std::int64_t sst_count(const Partition& shape, int n_letters) {
  // hook-content formula: prod (n + content) / hook
  if (shape.length() > n_letters) return 0;
  const Partition conj = shape.conjugate();
  mpz_class num = 1, den = 1;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      num *= n_letters + j - i;
      den *= (shape[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  mpz_class q = num / den;
  return q.get_si();
}

Partition PieriConstituent::shape() const { return Partition({n + c1, n - 1 + c2, c3}); }

std::vector<PieriConstituent> pieri_constituents(int n) {
  if (n < 2) throw std::invalid_argument("pieri_constituents needs n >= 2");
  std::vector<PieriConstituent> out;
  for (int c2 = 0; c2 <= 1; ++c2)
    for (int c1 = 0; c1 + c2 <= n - 1; ++c1) {
      const int c3 = n - 1 - c1 - c2;
      if (c3 > n - 1 + c2) continue;
      out.push_back({n, c1, c2, c3});
    }
  std::sort(out.begin(), out.end(),
            [](const PieriConstituent& a, const PieriConstituent& b) { return a.shape() < b.shape(); });
  return out;
}

// ------------------------------------------------------ symmetric group

std::int64_t factorial(int m) {
  std::int64_t f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

std::int64_t specht_dim(const Partition& p) {
  const Partition conj = p.conjugate();
  mpz_class num, den = 1;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(p.size()));
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) den *= (p[i] - j - 1) + (conj[j] - i - 1) + 1;
  mpz_class q = num / den;
  return q.get_si();
}

namespace {

using Memo = std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>;

std::int64_t mn_rec(const std::vector<int>& parts, const std::vector<int>& cycles, std::size_t idx, Memo& memo) {
  if (idx == cycles.size()) return parts.empty() ? 1 : 0;
  auto key = std::make_pair(parts, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int len = static_cast<int>(parts.size());
  const int r = cycles[idx];
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);  // strictly decreasing

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> np(len);
    for (int k = 0; k < len; ++k) np[k] = nb[k] - (len - 1 - k);
    strip_zeros(np);
    const std::int64_t sub = mn_rec(np, cycles, idx + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& p, const CycleType& c) {
  if (p.size() != c.size()) throw std::invalid_argument("mn_character: sizes differ");
  Memo memo;
  return mn_rec(p.parts(), c.parts(), 0, memo);
}

std::int64_t centralizer_order(const CycleType& c) {
  std::map<int, int> mult;
  for (int k : c.parts()) ++mult[k];
  std::int64_t z = 1;
  for (auto [k, m] : mult) {
    for (int t = 0; t < m; ++t) z *= k;
    z *= factorial(m);
  }
  return z;
}

std::vector<int> class_representative(const CycleType& c) {
  std::vector<int> perm(c.size());
  int start = 1;
  for (int len : c.parts()) {
    for (int k = 0; k < len; ++k) perm[start + k - 1] = start + (k + 1) % len;
    start += len;
  }
  return perm;
}

CycleType cycle_type_of(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j] - 1) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition(lens);
}

}  // namespace wl::comb
