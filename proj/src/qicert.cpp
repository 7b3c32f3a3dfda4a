#include "spotted/qicert.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spotted/whitehead.hpp"

namespace spotted {

ReducedWord make_bt(int g, int t) {
  if (g < 4) throw std::invalid_argument("b_t requires rank g >= 4");
  if (t < 1) throw std::invalid_argument("b_t requires t >= 1");
  std::vector<Letter> letters;
  auto block = [&](Letter x) { letters.insert(letters.end(), static_cast<std::size_t>(t + 1), x); };
  for (int i = 1; i <= g; ++i) block(i);
  block(1);
  block(2);
  block(1);
  return ReducedWord::reduce(letters, g);
}

ReducedWord lambda_word(int g, const LatticePoint& k, const TAssignment& t_of) {
  ReducedWord out(g);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    out = concat(out, power(make_bt(g, t_of(static_cast<int>(i) + 1)), k[i]));
  }
  return out;
}

ReducedWord relative_word(int g, const LatticePoint& k, const LatticePoint& l, const TAssignment& t_of) {
  if (k.size() != l.size()) throw std::invalid_argument("lattice points of different dimension");
  return concat(inverse(lambda_word(g, k, t_of)), lambda_word(g, l, t_of));
}

BoundTrace upper_bound(const LatticePoint& k, const LatticePoint& l, int g, PushBudget budget, const TAssignment& t_of) {
  if (k.size() != l.size()) throw std::invalid_argument("lattice points of different dimension");
  const auto per_power = static_cast<std::int64_t>(budget);
  const std::size_t n = k.size();
  BoundTrace trace;

  // Move coordinates from the last to the first. Before handling coordinate i
  // the pair is (push along b_1^{k_1}..b_i^{k_i}, push along b_n^{-l_n}..b_{i+1}^{-l_{i+1}}).
  for (std::size_t idx = n; idx-- > 0;) {
    const int coord = static_cast<int>(idx) + 1;
    const ReducedWord b = make_bt(g, t_of(coord));
    const long delta = k[idx] > l[idx] ? k[idx] - l[idx] : l[idx] - k[idx];

    BoundTrace step;
    step.append(BoundRule::distance_estimate,
                "d(push b_" + std::to_string(coord) + "^" + std::to_string(k[idx]) + ", push b_" +
                    std::to_string(coord) + "^" + std::to_string(l[idx]) + ") <= " + std::to_string(per_power) +
                    "*" + std::to_string(delta),
                per_power * delta);

    LatticePoint prefix_point(k.begin(), k.begin() + static_cast<long>(idx));
    const ReducedWord prefix = lambda_word(g, prefix_point, t_of);
    step = precompose_bound(power(b, k[idx]), power(b, l[idx]), prefix, step);

    trace.append(step);
    trace.append(BoundRule::isometric_relabel,
                 "change basepoint: push p2 along b_" + std::to_string(coord) + "^" + std::to_string(-l[idx]), 0);
  }
  trace.append(BoundRule::triangle, "chain the " + std::to_string(n) + " coordinate moves, then push p2 along Lambda(l)",
               0);
  return trace;
}

namespace {

LatticePoint point_at(std::size_t index, int n, int grid_max) {
  LatticePoint p(static_cast<std::size_t>(n), 0);
  const auto base = static_cast<std::size_t>(grid_max) + 1;
  for (int i = n - 1; i >= 0; --i) {
    p[static_cast<std::size_t>(i)] = static_cast<long>(index % base);
    index /= base;
  }
  return p;
}

CertificateRow make_row(const CertifyOptions& o, LatticePoint k, LatticePoint l) {
  CertificateRow row;
  row.relative = relative_word(o.g, k, l, o.t_of);
  if (row.relative.size() > o.max_word_length) {
    throw CapExceeded("relative word of length " + std::to_string(row.relative.size()) + " exceeds cap " +
                      std::to_string(o.max_word_length));
  }
  for (std::size_t i = 0; i < k.size(); ++i) row.displacement += k[i] > l[i] ? k[i] - l[i] : l[i] - k[i];
  row.lower = simple_length_lower_bound(row.relative);
  row.upper = upper_bound(k, l, o.g, o.budget, o.t_of).total;
  row.ratio = row.displacement > 0 ? row.lower / Rational(row.displacement) : Rational(0);
  row.k = std::move(k);
  row.l = std::move(l);
  return row;
}

}  // namespace

std::vector<CertificateRow> certify_grid(const CertifyOptions& o) {
  if (o.g < 4) throw CapExceeded("certificate requires rank g >= 4");
  if (o.n < 1 || o.grid_max < 0) throw CapExceeded("certificate requires n >= 1 and grid_max >= 0");

  std::size_t points = 1;
  for (int i = 0; i < o.n; ++i) points *= static_cast<std::size_t>(o.grid_max) + 1;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(points * (points + 1) / 2);
  for (std::size_t a = 0; a < points; ++a) {
    for (std::size_t b = a; b < points; ++b) pairs.emplace_back(a, b);
  }

  std::vector<CertificateRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size() && !failed; i = next++) {
      try {
        rows[i] = make_row(o, point_at(pairs[i].first, o.n, o.grid_max), point_at(pairs[i].second, o.n, o.grid_max));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };

  const unsigned jobs = std::max(1U, o.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

CertificateSummary summarize(const std::vector<CertificateRow>& rows, const CertifyOptions& o) {
  CertificateSummary s;
  s.rows = rows.size();
  bool first = true;
  for (const auto& r : rows) {
    if (Rational(r.upper) < r.lower) s.sandwich_holds = false;
    if (r.displacement == 0) continue;
    ++s.moving_rows;
    if (first || r.ratio < s.min_ratio) s.min_ratio = r.ratio;
    if (first || r.ratio > s.max_ratio) s.max_ratio = r.ratio;
    first = false;
  }

  std::set<ReducedWord> images;
  std::size_t points = 1;
  for (int i = 0; i < o.n; ++i) points *= static_cast<std::size_t>(o.grid_max) + 1;
  for (std::size_t i = 0; i < points; ++i) images.insert(lambda_word(o.g, point_at(i, o.n, o.grid_max), o.t_of));
  s.injective = images.size() == points;
  return s;
}

std::string format_point(const LatticePoint& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string to_csv(const std::vector<CertificateRow>& rows, int n, int g) {
  std::ostringstream out;
  out << "n,g,k,l,displacement,lower,upper,ratio\n";
  for (const auto& r : rows) {
    out << n << ',' << g << ',' << format_point(r.k) << ',' << format_point(r.l) << ',' << r.displacement << ','
        << to_string(r.lower) << ',' << r.upper << ',' << to_fixed(r.ratio, 6) << '\n';
  }
  return out.str();
}

}  // namespace spotted
