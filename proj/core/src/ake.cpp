#include "valkit/ake.hpp"

#include <future>

#include "valkit/error.hpp"

namespace valkit {

AkeReport ake_compare(const Sentence& sentence, int n, const std::vector<Prime>& primes, std::uint64_t budget) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "nilpotency index must be at least 1");
  for (Prime p : primes) require_prime(p);

  std::vector<std::future<AkeRow>> tasks;
  for (Prime p : primes) {
    tasks.push_back(std::async(std::launch::async, [&sentence, n, p, budget] {
      AkeRow row;
      row.prime = p;
      try {
        const auto zmod = FiniteLocalRing::integers_mod(p, n);
        const auto trunc = FiniteLocalRing::truncated(p, n);
        // Check both costs before spending time on either side.
        if (evaluation_cost(zmod, sentence) > budget) {
          fail(ErrorKind::DomainTooLarge, zmod.name() + " exceeds the evaluation budget");
        }
        row.zmod = evaluate(zmod, sentence, budget);
        row.trunc = evaluate(trunc, sentence, budget);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DomainTooLarge) throw;
        row.zmod.reset();
        row.trunc.reset();
        row.skipped_reason = e.what();
      }
      return row;
    }));
  }

  AkeReport report;
  report.sentence = sentence.to_string();
  report.n = n;
  for (auto& task : tasks) report.rows.push_back(task.get());
  for (const auto& row : report.rows) {
    if (!row.evaluated()) {
      report.skipped.push_back(row.prime);
    } else if (*row.zmod != *row.trunc) {
      report.disagreement.push_back(row.prime);
    }
  }
  for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
    if (!it->evaluated()) continue;
    if (*it->zmod != *it->trunc) break;
    report.agreement_from = it->prime;
  }
  return report;
}

std::vector<Prime> primes_in_range(Prime lo, Prime hi) {
  std::vector<Prime> out;
  for (Prime p = std::max<Prime>(lo, 2); p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace valkit
