// Compares the serial reference kernels with the OpenMP-parallel ones on a
// few catalog groups: class algebra constants, fusion tensor, associativity
// quadruple scan.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "cgt/fusion.hpp"

using cgt::i64;

namespace {

template <typename F>
double time_seconds(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_group(const std::string& spec) {
  cgt::FiniteGroup G = cgt::group_from_spec_string(spec);
  cgt::ConjugacyClassPartition P = cgt::conjugacy_classes(G);
  std::printf("%s: order %lld, %d classes\n", G.name.c_str(), static_cast<long long>(G.order()),
              P.count());

  cgt::ClassAlgebraConstants C;
  const double t_const = time_seconds([&] { C = cgt::class_algebra_constants(G, P); });
  const double t_const_brute =
      time_seconds([&] { (void)cgt::class_algebra_constants_bruteforce(G, P); });
  std::printf("  class constants     %8.4fs   brute-force pair scan %8.4fs  (%.1fx)\n", t_const,
              t_const_brute, t_const_brute / t_const);

  cgt::ModularCharacterTable T;
  const double t_table = time_seconds([&] { T = cgt::character_table_mod_p(G, P, C); });
  std::printf("  character table     %8.4fs   (p = %lld)\n", t_table,
              static_cast<long long>(T.p));

  cgt::FusionRing F;
  const double t_fusion_serial =
      time_seconds([&] { F = cgt::fusion_from_character_table(T, P, G.order(), false); });
  const double t_fusion_par =
      time_seconds([&] { (void)cgt::fusion_from_character_table(T, P, G.order(), true); });
  std::printf("  fusion ring build   %8.4fs serial, %8.4fs parallel  (%.2fx)\n", t_fusion_serial,
              t_fusion_par, t_fusion_serial / t_fusion_par);

  const double t_assoc_serial =
      time_seconds([&] { (void)cgt::associativity_violations_serial(F); });
  const double t_assoc_par = time_seconds([&] { (void)cgt::associativity_violations(F); });
  std::printf("  associativity scan  %8.4fs serial, %8.4fs parallel  (%.2fx)\n\n", t_assoc_serial,
              t_assoc_par, t_assoc_serial / t_assoc_par);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark: serial reference vs OpenMP"};
  std::vector<std::string> groups = {"dihedral:32", "dihedral:64", "dihedral:128", "dihedral:256"};
  app.add_option("--group", groups, "group specs to benchmark");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels run serially\n\n");
#endif
  for (const auto& spec : groups) {
    try {
      bench_group(spec);
    } catch (const cgt::Error& e) {
      std::printf("%s: error: %s\n", spec.c_str(), e.what());
      return 2;
    }
  }
  return 0;
}
