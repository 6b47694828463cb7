#include "dihenum/counting.hpp"

#include <numeric>

#include <nlohmann/json.hpp>

#include "dihenum/cycle_index.hpp"
#include "dihenum/dihedral.hpp"

namespace dihenum {

long long totient(long long n) {
  long long result = n, m = n;
  for (long long f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    result -= result / f;
    while (m % f == 0) m /= f;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers
  }
  return result;
}

namespace {

void check_prime(int p) {
  if (!is_odd_prime(p)) throw NotOddPrime(p);
}

void check_degree(int k, int max) {
  if (k < 0 || k > max) throw DegreeOutOfRange(k, max);
}

}  // namespace

BigInt count_digraphs(int p) {
  check_prime(p);
  BigInt head = pow2(p) * (1 - pow2(p - 1));  // divisible by p (Fermat)
  BigInt tail = 0;
  for (long long d : divisors(p - 1)) tail += totient(d) * pow2(2 * (p - 1) / d);
  return exact_div(head, p) + exact_div(2 * tail, p - 1);
}

BigInt count_circulant_digraphs(int p) {
  check_prime(p);
  BigInt sum = 0;
  for (long long d : divisors(p - 1)) sum += totient(d) * pow2((p - 1) / d);
  return exact_div(sum, p - 1);
}

BigInt count_connected_digraphs(int p) {
  return count_digraphs(p) - count_circulant_digraphs(p) - 1;
}

BigInt count_digraphs_by_outdegree(int p, int k) {
  check_prime(p);
  check_degree(k, 2 * p - 1);
  if (k == 0 || k == 2 * p - 1) return 1;

  BigInt head = binomial(p - 1, k <= p - 1 ? k : k - p) - binomial(2 * p - 1, k);
  BigInt tail = 0;
  for (long long d : divisors(std::gcd<long long>(p - 1, k)))
    tail += totient(d) * binomial(2 * (p - 1) / d, k / d);
  for (long long d : divisors(std::gcd<long long>(p - 1, k - 1)))
    tail += totient(d) * binomial(2 * (p - 1) / d, (k - 1) / d);
  return exact_div(head, p) + exact_div(tail, p - 1);
}

BigInt count_circulant_digraphs_by_outdegree(int p, int k) {
  check_prime(p);
  check_degree(k, p - 1);
  BigInt sum = 0;
  for (long long d : divisors(std::gcd<long long>(p - 1, k)))
    sum += totient(d) * binomial((p - 1) / d, k / d);
  return exact_div(sum, p - 1);
}

BigInt count_connected_digraphs_by_outdegree(int p, int k) {
  check_prime(p);
  check_degree(k, 2 * p - 1);
  if (k <= 1) return 0;
  BigInt all = count_digraphs_by_outdegree(p, k);
  if (k <= p - 1) return all - count_circulant_digraphs_by_outdegree(p, k);
  return all;
}

BigInt count_graphs(int p) {
  check_prime(p);
  BigInt head = pow2((p + 1) / 2) - pow2((3 * p - 1) / 2);
  BigInt tail = 0;
  for (int i = 0; i <= p - 2; ++i)
    tail += pow2(std::gcd(2 * i, p - 1) / 2 + std::gcd(i, p - 1));
  return exact_div(head, p) + exact_div(2 * tail, p - 1);
}

BigInt count_circulant_graphs(int p) {
  check_prime(p);
  BigInt sum = 0;
  for (long long d : divisors((p - 1) / 2))
    sum += totient(d) * pow2((p - 1) / (2 * d));
  return exact_div(2 * sum, p - 1);
}

BigInt count_connected_graphs(int p) {
  return count_graphs(p) - count_circulant_graphs(p) - 1;
}

BigInt count_graphs_by_valency(int p, int k) {
  check_prime(p);
  check_degree(k, 2 * p - 1);
  const DihedralGroup group(p);
  const auto index = cycle_index(group, ActionKind::Graph, IndexMethod::Closed);
  return coefficient(subset_polynomial(index, {2, 1}), k);
}

std::string to_string(ActionKind kind) {
  return kind == ActionKind::Digraph ? "digraph" : "graph";
}

std::string to_string(CountFilter filter) {
  return filter == CountFilter::All ? "all" : "connected";
}

std::string to_string(CountMethod method) {
  switch (method) {
    case CountMethod::ClosedForm: return "closed_form";
    case CountMethod::Polya: return "polya";
    default: return "oracle";
  }
}

std::string to_json(const CountReport& report) {
  nlohmann::json j;
  j["p"] = report.p;
  j["kind"] = to_string(report.kind);
  j["filter"] = to_string(report.filter);
  j["method"] = to_string(report.method);
  j["total"] = report.total.str();
  if (report.by_degree) {
    nlohmann::json degrees = nlohmann::json::object();
    for (const auto& [k, count] : *report.by_degree)
      degrees[std::to_string(k)] = count.str();
    j["by_degree"] = degrees;
  }
  return j.dump();
}

std::string to_csv(const CountReport& report) {
  std::string out;
  if (report.by_degree) {
    out = "k,count\n";
    for (const auto& [k, count] : *report.by_degree)
      out += std::to_string(k) + "," + count.str() + "\n";
  } else {
    out = "p,kind,filter,method,total\n";
    out += std::to_string(report.p) + "," + to_string(report.kind) + "," +
           to_string(report.filter) + "," + to_string(report.method) + "," +
           report.total.str() + "\n";
  }
  return out;
}

}  // namespace dihenum
