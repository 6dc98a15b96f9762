// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "asorder/cli.hpp"
#include "asorder/verify.hpp"

using namespace asorder;

namespace {

std::string g_cli;
int g_failures = 0;

struct CommandResult {
    int code = -1;
    std::string out;
};

CommandResult run_cli(const std::string& args) {
    CommandResult res;
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void criterion(int id, const std::string& label, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over the time limit");
    }
    if (!ok) ++g_failures;
    std::printf("[%d] %-52s %s (%.2fs)%s%s\n", id, label.c_str(), ok ? "PASS" : "FAIL", elapsed,
                detail.empty() ? "" : " -- ", detail.c_str());
}

std::vector<FqElem> all_elements(const FieldPtr& f) {
    std::vector<FqElem> out;
    std::uint64_t q = f->q.convert_to<std::uint64_t>();
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(element_at(f, i));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <cli binary>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion(1, "counting identity and exhaustive census", 5.0, [](std::string& detail) {
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL})
            for (unsigned m = 1; m <= 12; ++m) {
                BigInt total = 0;
                for (std::uint64_t d : sorted_divisors(m))
                    total += count_outside(p, static_cast<unsigned>(d));
                if (total != pow_uint(p, m)) {
                    detail = "resum failed at p=" + std::to_string(p) + " m=" + std::to_string(m);
                    return false;
                }
            }
        int fields = 0;
        for (std::uint64_t p = 2; p <= 729; ++p) {
            if (!is_prime_u64(p)) continue;
            for (unsigned n = 1; pow_uint(p, n) <= 729; ++n) {
                auto f = Field::make(p, n);
                BigInt outside = 0;
                for (const auto& b : all_elements(f))
                    if (!in_proper_subfield(b)) ++outside;
                if (outside != count_outside(p, n)) {
                    detail = "census mismatch at q=" + f->q.str();
                    return false;
                }
                ++fields;
            }
        }
        detail = std::to_string(fields) + " prime powers checked";
        return true;
    });

    criterion(2, "budget count formula vs enumeration (N<=8, s+t<=4)", 10.0,
              [](std::string& detail) {
                  long long cases = 0;
                  for (unsigned len = 1; len <= 8; ++len)
                      for (unsigned s = 0; s <= 4; ++s)
                          for (unsigned t = 0; s + t <= 4; ++t) {
                              std::size_t seen = 0;
                              enumerate_budget_vectors(
                                  len, s, t, [&](const ExponentVector&) { ++seen; });
                              if (BigInt(seen) != count_budget_vectors(len, s, t)) {
                                  detail = "mismatch at N=" + std::to_string(len) + " s=" +
                                           std::to_string(s) + " t=" + std::to_string(t);
                                  return false;
                              }
                              ++cases;
                          }
                  if (count_budget_vectors(3, 1, 1) != 13 || count_budget_vectors(5, 2, 2) != 271) {
                      detail = "pinned values 13/271 missed";
                      return false;
                  }
                  detail = std::to_string(cases) + " (N,s,t) cases";
                  return true;
              });

    criterion(3, "binomial product strictly below the exact count", 10.0,
              [](std::string& detail) {
                  for (unsigned len = 1; len <= 8; ++len)
                      for (unsigned s = 0; s <= std::min(len, 4u); ++s)
                          for (unsigned t = 0; s + t <= 4; ++t) {
                              BigInt lower = binom_product_bound(len, s, t);
                              BigInt exact = count_budget_vectors(len, s, t);
                              if (s >= 1 && t >= 1 && !(lower < exact)) {
                                  detail = "not strict at N=" + std::to_string(len);
                                  return false;
                              }
                              if (s == 0 && t == 0 && lower != exact) {
                                  detail = "no equality at s=t=0";
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(4, "stirling bracket around exact binomials", 1.0, [](std::string& detail) {
        for (unsigned r = 2; r <= 6; ++r)
            for (unsigned s = 1; s <= 30; ++s) {
                Bracket br = sasvari_bracket(static_cast<long double>(r),
                                             static_cast<long double>(s));
                long double truth = binomial(static_cast<std::uint64_t>(r) * s, s)
                                        .convert_to<long double>();
                if (!(br.lower < truth && truth < br.upper)) {
                    detail = "bracket failed at r=" + std::to_string(r) + " s=" + std::to_string(s);
                    return false;
                }
            }
        return true;
    });

    criterion(5, "distinctness and injectivity lemmas at desk scale", 30.0,
              [](std::string& detail) {
                  auto check_ctx = [&](const KContextPtr& ctx) -> bool {
                      for (const auto& b : all_elements(ctx->base)) {
                          if (in_proper_subfield(b)) continue;
                          if (!distinctness_check(ctx, b).distinct) return false;
                          for (unsigned s = 0; s < ctx->base->p; ++s)
                              for (unsigned t = 0; s + t < ctx->base->p; ++t)
                                  if (!injectivity_check(ctx, b, s, t).injective) return false;
                      }
                      return true;
                  };
                  auto ctx27 = KContext::make(Field::make(3, 1), 1);
                  if (!check_ctx(ctx27)) {
                      detail = "failure in the 27-element extension";
                      return false;
                  }
                  auto base9 = Field::make(3, 2);
                  auto ctx729 = KContext::make(base9, 1);
                  unsigned valid = 0;
                  for (const auto& b : all_elements(base9))
                      if (!in_proper_subfield(b)) ++valid;
                  if (valid != 6) {
                      detail = "expected 6 valid b in F_9";
                      return false;
                  }
                  if (!check_ctx(ctx729)) {
                      detail = "failure in the 729-element extension";
                      return false;
                  }
                  auto bad = distinctness_check(ctx729, FqElem::one(base9));
                  if (bad.distinct || !bad.witness || bad.witness->first != 0 ||
                      bad.witness->second != 3) {
                      detail = "subfield witness (0,3) missed";
                      return false;
                  }
                  return true;
              });

    criterion(6, "order chain and the printed-constant violation", 10.0,
              [](std::string& detail) {
                  auto ctx = KContext::make(Field::make(3, 1), 1);
                  KElem th = theta(ctx);
                  // independent route: theta + j = theta^(3^j)
                  if (pow(th, 3) != theta_plus(ctx, FqElem::from_residue(ctx->base, 1)) ||
                      pow(th, 9) != theta_plus(ctx, FqElem::from_residue(ctx->base, 2))) {
                      detail = "frobenius identity route failed";
                      return false;
                  }
                  for (std::uint64_t bv = 0; bv < 3; ++bv) {
                      VerificationRecord r = verify_instance(3, 1, 1, {bv});
                      if (!r.order || r.order->element_order != 13 ||
                          r.bounds->exact_best != 13 || !r.order_meets_exact) {
                          detail = "order 13 not certified at b=" + std::to_string(bv);
                          return false;
                      }
                      if (r.closed_le_order.at("primeClosedForm")) {
                          detail = "printed constant did not register as a violation";
                          return false;
                      }
                  }
                  CommandResult cli = run_cli("verify --p 3 --n 1 --a 1 --b 0 --output json");
                  if (cli.code != 2) {
                      detail = "verify exit code " + std::to_string(cli.code) + ", wanted 2";
                      return false;
                  }
                  auto j = nlohmann::json::parse(cli.out);
                  bool flagged = false;
                  for (const auto& f : j["flags"])
                      if (f == "CLOSED_FORM_EXCEEDS_EXACT") flagged = true;
                  if (!flagged) {
                      detail = "discrepancy flag missing from the CLI report";
                      return false;
                  }
                  auto base9 = Field::make(3, 2);
                  for (const auto& b : all_elements(base9)) {
                      if (in_proper_subfield(b)) continue;
                      VerificationRecord r = verify_instance(3, 2, 1, b.coeffs());
                      if (!r.order || r.order->element_order < 43 || !r.order_meets_exact) {
                          detail = "order below 43 at b=" + poly_text(b.coeffs());
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "table rows match the reconstructed base", 1.0, [](std::string& detail) {
        for (const auto& row : published_table_rows()) {
            long double computed = table_row_base(row.n);
            long double rel = std::fabs(computed - static_cast<long double>(row.published)) /
                              static_cast<long double>(row.published);
            if (rel > 1e-3L) {
                detail = "row n=" + std::to_string(row.n) + " off by rel " +
                         std::to_string(static_cast<double>(rel));
                return false;
            }
        }
        CommandResult cli = run_cli("table --output json");
        if (cli.code != 0) {
            detail = "table command exit " + std::to_string(cli.code);
            return false;
        }
        auto j = nlohmann::json::parse(cli.out);
        if (j["provenance"] != "reconstructed") {
            detail = "provenance label missing";
            return false;
        }
        return true;
    });

    criterion(8, "closed form below the binomial chain", 1.0, [](std::string& detail) {
        for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL})
            for (unsigned n : {2u, 3u, 4u, 5u}) {
                unsigned k = static_cast<unsigned>((p - 1) / 2);
                BigInt chain = binom_product_bound(n * static_cast<unsigned>(p), k, k);
                if (compare_log_to_int(std::log(extension_order_bound(p, n)), chain) > 0) {
                    detail = "chain broken at p=" + std::to_string(p) + " n=" + std::to_string(n);
                    return false;
                }
            }
        return true;
    });

    criterion(9, "sweep determinism (byte-identical JSON)", 60.0, [](std::string& detail) {
        CommandResult a = run_cli("sweep --p 3,5 --n 1,2 --output json");
        CommandResult b = run_cli("sweep --p 3,5 --n 1,2 --output json");
        if (a.code == -1 || b.code == -1 || a.out.empty()) {
            detail = "sweep did not run";
            return false;
        }
        if (a.code != b.code || a.out != b.out) {
            detail = "outputs differ between runs";
            return false;
        }
        detail = std::to_string(a.out.size()) + " bytes, exit " + std::to_string(a.code);
        return true;
    });

    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
