// Writes a Frobenius table for the Legendre family y^2 = x(x-1)(x-lambda)
// over F_p: one entry per lambda in F_{p^r} \ {0, 1}, r = 1, 2, ..., with
// P(T) = T^2 - a T + p^r and a = -sum_x chi(x(x-1)(x-lambda)).

#include <iostream>

#include <boost/program_options.hpp>

#include "saturate/cli/json_io.hpp"
#include "saturate/error.hpp"

namespace po = boost::program_options;
using namespace saturate;

namespace {

// Quadratic character as -1, 0, 1.
int chi(const ff::Field& f, ff::Elem y) {
  if (!y.code) return 0;
  return f.pow(y, (f.order() - 1) / 2) == f.one() ? 1 : -1;
}

std::int64_t trace_of_frobenius(const ff::Field& f, ff::Elem lambda) {
  std::int64_t s = 0;
  for (auto x : f.elements()) {
    const ff::Elem v = f.mul(f.mul(x, f.sub(x, f.one())), f.sub(x, lambda));
    s += chi(f, v);
  }
  return -s;
}

}  // namespace

int main(int argc, char** argv) {
  po::options_description desc("saturate-legendre-table [--p P] [--count N]");
  desc.add_options()("help", "show this text")("p", po::value<std::uint32_t>()->default_value(5), "odd prime")(
      "count", po::value<std::size_t>()->default_value(50), "number of entries");
  po::variables_map vm;
  try {
    po::store(po::parse_command_line(argc, argv, desc), vm);
    po::notify(vm);
  } catch (const po::error& e) {
    std::cerr << e.what() << '\n' << desc;
    return 2;
  }
  if (vm.count("help")) {
    std::cout << desc;
    return 0;
  }
  const std::uint32_t p = vm["p"].as<std::uint32_t>();
  const std::size_t count = vm["count"].as<std::size_t>();
  if (p == 2 || !ff::is_prime(p)) {
    std::cerr << "p must be an odd prime\n";
    return 2;
  }

  frobenius::FrobTable table;
  table.p = p;
  table.degree = 2;
  table.kappa_degree = 1;
  try {
    for (unsigned r = 1; table.entries.size() < count; ++r) {
      const ff::Field f = ff::Field::create(p, r);
      const std::int64_t q = f.order();
      for (auto lambda : f.elements()) {
        if (table.entries.size() == count) break;
        if (lambda.code < 2) continue;  // 0 and 1 give singular curves
        const std::int64_t a = trace_of_frobenius(f, lambda);
        std::string id = "q" + std::to_string(q) + "-lambda";
        for (auto c : f.coeffs(lambda)) id += "-" + std::to_string(c);
        table.entries.push_back({id, r, q, frobenius::ExactPolynomial::from_ints({q, -a, 1})});
      }
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  std::cout << cli::frob_table_to_json(table).dump(2) << '\n';
  return 0;
}
