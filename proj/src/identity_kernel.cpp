#include "omegalie/identity_kernel.hpp"

#include "omegalie/free_ternary.hpp"

namespace omegalie {

std::vector<SlotMap> slot_maps(std::span<const Perm5> elements) {
  std::vector<SlotMap> out;
  out.reserve(elements.size());
  for (const auto& rho : elements) {
    SlotMap s{};
    for (int j = 0; j < 5; ++j)
      s[j] = static_cast<std::uint8_t>(rho(j + 1) - 1);
    out.push_back(s);
  }
  return out;
}

std::vector<SlotMap> family_slot_maps() {
  std::vector<SlotMap> out;
  for (const auto& seed : omega_family_seeds())
    for (int k = 0; k < 5; ++k) {
      SlotMap s{};
      for (int j = 0; j < 5; ++j)
        s[j] = static_cast<std::uint8_t>(seed[(j + k) % 5] - 1);
      out.push_back(s);
    }
  return out;
}

namespace {

void record(CheckReport& report, std::array<std::size_t, 6> idx, const EisScalar& value,
            std::size_t limit) {
  ++report.violation_count;
  report.passed = false;
  if (report.violations.size() < limit) {
    Violation v;
    for (auto x : idx)
      v.indices.push_back(static_cast<int>(x) + 1);
    v.residual = value;
    report.violations.push_back(std::move(v));
  }
}

} // namespace

CheckReport identity_residuals_serial(const StructureTensor& c, std::span<const SlotMap> maps,
                                      std::size_t limit) {
  const std::size_t n = c.dim();
  CheckReport report;
  std::array<std::size_t, 5> x{};
  EisScalar sum;
  for (x[0] = 0; x[0] < n; ++x[0])
    for (x[1] = 0; x[1] < n; ++x[1])
      for (x[2] = 0; x[2] < n; ++x[2])
        for (x[3] = 0; x[3] < n; ++x[3])
          for (x[4] = 0; x[4] < n; ++x[4])
            for (std::size_t p = 0; p < n; ++p) {
              sum = EisScalar{};
              for (const auto& s : maps)
                for (std::size_t m = 0; m < n; ++m)
                  sum.add_product(c(m, x[s[0]], x[s[1]], x[s[2]]), c(p, m, x[s[3]], x[s[4]]));
              ++report.checked;
              if (!sum.is_zero())
                record(report, {x[0], x[1], x[2], x[3], x[4], p}, sum, limit);
            }
  return report;
}

CheckReport identity_residuals_parallel(const StructureTensor& c, std::span<const SlotMap> maps,
                                        std::size_t limit) {
  const std::size_t n = c.dim();
  const std::size_t n2 = n * n, n3 = n2 * n;
  const auto prefixes = static_cast<long>(n3);

  // P[(a,b,c)][(d,e,p)], both halves flattened
  std::vector<EisScalar> table(n3 * n3);
#pragma omp parallel for schedule(dynamic)
  for (long abc = 0; abc < prefixes; ++abc) {
    const std::size_t a = abc / n2, b = abc / n % n, cc = abc % n;
    EisScalar* row = &table[abc * n3];
    for (std::size_t m = 0; m < n; ++m) {
      const EisScalar& left = c(m, a, b, cc);
      if (left.is_zero())
        continue;
      for (std::size_t dep = 0; dep < n3; ++dep) {
        const std::size_t d = dep / n2, e = dep / n % n, p = dep % n;
        const EisScalar& right = c(p, m, d, e);
        if (!right.is_zero())
          row[dep].add_product(left, right);
      }
    }
  }

  std::vector<CheckReport> partial(n3);
#pragma omp parallel for schedule(dynamic)
  for (long ikl = 0; ikl < prefixes; ++ikl) {
    CheckReport& local = partial[ikl];
    std::array<std::size_t, 5> x{static_cast<std::size_t>(ikl) / n2,
                                 static_cast<std::size_t>(ikl) / n % n,
                                 static_cast<std::size_t>(ikl) % n, 0, 0};
    EisScalar sum;
    for (x[3] = 0; x[3] < n; ++x[3])
      for (x[4] = 0; x[4] < n; ++x[4])
        for (std::size_t p = 0; p < n; ++p) {
          sum = EisScalar{};
          for (const auto& s : maps) {
            const EisScalar& entry = table[((x[s[0]] * n + x[s[1]]) * n + x[s[2]]) * n3 +
                                           (x[s[3]] * n + x[s[4]]) * n + p];
            if (!entry.is_zero())
              sum += entry;
          }
          ++local.checked;
          if (!sum.is_zero())
            record(local, {x[0], x[1], x[2], x[3], x[4], p}, sum, limit);
        }
  }

  CheckReport report;
  for (auto& part : partial) {
    report.checked += part.checked;
    report.violation_count += part.violation_count;
    for (auto& v : part.violations)
      if (report.violations.size() < limit)
        report.violations.push_back(std::move(v));
  }
  report.passed = report.violation_count == 0;
  return report;
}

} // namespace omegalie
