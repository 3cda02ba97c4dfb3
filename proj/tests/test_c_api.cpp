// Exercises the shared library through its C header only.
#include "doctest.h"

#include "kgspec/kgspec.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>

namespace {

struct ModelDeleter {
  void operator()(kg_model* m) const { kg_model_free(m); }
};
using Model = std::unique_ptr<kg_model, ModelDeleter>;

Model rosen_morse_well() {
  kg_model* m = nullptr;
  REQUIRE(kg_model_rosen_morse_well(1, -1, 1, 1, &m) == KG_OK);
  return Model(m);
}

} // namespace

TEST_CASE("special functions") {
  double v = 0.0;
  CHECK(kg_gamma(5.0, &v) == KG_OK);
  CHECK(v == doctest::Approx(24.0));
  CHECK(kg_gamma(-2.0, &v) == KG_ERR_POLE);
  CHECK(std::string(kg_last_error()).find("pole") != std::string::npos);
  CHECK(kg_jacobi(2, 0, 0, 0.6, &v) == KG_OK);
  CHECK(v == doctest::Approx(0.04));
  CHECK(kg_hyp2f1_terminating(3, 1.0, -1.0, 0.5, &v) == KG_ERR_PARAMETER);
  CHECK(kg_gamma(1.0, nullptr) == KG_ERR_NULL);
  CHECK(std::string(kg_status_name(KG_ERR_WINDOW)) == "window");
}

TEST_CASE("model handles") {
  kg_model* m = nullptr;
  CHECK(kg_model_hulthen(1.0, 0.0, &m) == KG_ERR_PARAMETER);
  CHECK(m == nullptr);
  const Model rm = rosen_morse_well();
  CHECK(std::string(kg_model_name(rm.get())) == "rosen-morse-well");
  CHECK(kg_model_alpha(rm.get()) == 1.0);
  CHECK(kg_model_supports_full_line(rm.get()) == 1);
  kg_model* raw = nullptr;
  REQUIRE(kg_model_with_alpha(rm.get(), 0.5, &raw) == KG_OK);
  const Model half(raw);
  CHECK(kg_model_alpha(half.get()) == 0.5);
  double v = 0.0;
  CHECK(kg_potential(rm.get(), -1.0, 1, &v) == KG_OK);
  CHECK(kg_potential(rm.get(), -1.0, 0, &v) == KG_ERR_DOMAIN);
}

TEST_CASE("reference spectrum through the C interface") {
  const Model m = rosen_morse_well();
  kg_states* s = nullptr;
  REQUIRE(kg_find_bound_states(m.get(), 1, 0, 3, KG_BRANCH_BOTH, 4.0, nullptr, &s) == KG_OK);
  double want[4];
  REQUIRE(kg_table1_reference(1, 1, want) == KG_OK);
  REQUIRE(kg_states_count(s) == 4);
  for (size_t i = 0; i < 4; ++i) {
    kg_bound_state b;
    REQUIRE(kg_states_get(s, i, &b) == KG_OK);
    CHECK(std::abs(b.energy - want[i]) < 5e-4);
    CHECK(b.sign == KG_SIGN_PLUS);
  }
  kg_bound_state b;
  CHECK(kg_states_get(s, 4, &b) == KG_ERR_RANGE);
  kg_states_free(s);

  int complex_window = 0;
  double r = 0.0;
  CHECK(kg_energy_residual(m.get(), 1, 0, 3, KG_SIGN_PLUS, 4.0, 1.8137, &r, &complex_window) == KG_OK);
  CHECK(complex_window == 0);
  CHECK(std::abs(r) < 1e-3);
  CHECK(kg_energy_residual(m.get(), 1, 1, 3, KG_SIGN_PLUS, 4.0, 1.8137, &r, &complex_window) ==
        KG_ERR_S_WAVE_ONLY);
  CHECK(kg_energy_residual(m.get(), 1, 0, 3, KG_SIGN_PLUS, 4.0, 4.5, &r, &complex_window) == KG_ERR_WINDOW);

  kg_scan_config cfg = kg_scan_config_default();
  cfg.grid_points = 10;
  CHECK(kg_find_bound_states(m.get(), 1, 0, 3, KG_BRANCH_BOTH, 4.0, &cfg, &s) == KG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reference table accessors") {
  CHECK(kg_table1_block_count() == 4);
  kg_table_block blk;
  REQUIRE(kg_table1_block(2, &blk) == KG_OK);
  CHECK(blk.mass == 5.0);
  CHECK(kg_table1_block(0, &blk) == KG_ERR_RANGE);
  double e[4];
  REQUIRE(kg_table1_reference(1, 2, e) == KG_OK);
  CHECK(std::isnan(e[2]));
}

TEST_CASE("wavefunction sample") {
  kg_model* raw = nullptr;
  REQUIRE(kg_model_hulthen(0.25, 0.25, &raw) == KG_OK);
  const Model h(raw);
  kg_states* s = nullptr;
  REQUIRE(kg_find_bound_states(h.get(), 0, 0, 3, KG_BRANCH_PLUS, 1.0, nullptr, &s) == KG_OK);
  REQUIRE(kg_states_count(s) == 2);
  kg_bound_state good, bad;
  kg_states_get(s, 0, &good);
  kg_states_get(s, 1, &bad);
  kg_states_free(s);
  CHECK((good.flags & KG_FLAG_P_POSITIVE) != 0);
  CHECK((bad.flags & KG_FLAG_P_POSITIVE) == 0);

  kg_grid_config cfg = kg_grid_config_default();
  cfg.samples = 50;
  kg_sample* smp = nullptr;
  REQUIRE(kg_sample_state(h.get(), &good, &cfg, 1, &smp) == KG_OK);
  CHECK(kg_sample_size(smp) == 50);
  CHECK(kg_sample_nodes(smp) == 0);
  CHECK(kg_sample_normalization(smp) > 0);
  CHECK(kg_sample_max_residual(smp) < 1e-6);
  double r, u, R;
  REQUIRE(kg_sample_point(smp, 10, &r, &u, &R) == KG_OK);
  CHECK(R == doctest::Approx(u / r));
  std::FILE* f = std::tmpfile();
  REQUIRE(f != nullptr);
  CHECK(kg_sample_write_csv(smp, f) == KG_OK);
  std::rewind(f);
  char line[64] = {};
  REQUIRE(std::fgets(line, sizeof line, f) != nullptr);
  CHECK(std::strcmp(line, "r,u,R\n") == 0);
  std::fclose(f);
  kg_sample_free(smp);

  CHECK(kg_sample_state(h.get(), &bad, &cfg, 1, &smp) == KG_ERR_NON_NORMALIZABLE);
  CHECK(kg_sample_state(h.get(), &bad, &cfg, 0, &smp) == KG_OK);
  kg_sample_free(smp);
}

TEST_CASE("oracle entry points") {
  kg_model* raw = nullptr;
  REQUIRE(kg_model_hulthen(0.25, 0.25, &raw) == KG_OK);
  const Model h(raw);
  kg_comparisons* c = nullptr;
  REQUIRE(kg_oracle_compare(h.get(), 0, 0, 3, KG_BRANCH_PLUS, 1.0, 1e-6, nullptr, &c) == KG_OK);
  REQUIRE(kg_comparisons_count(c) >= 1);
  kg_comparison first;
  REQUIRE(kg_comparisons_get(c, 0, &first) == KG_OK);
  CHECK(first.has_shot);
  CHECK(first.agree);
  kg_comparisons_free(c);

  REQUIRE(kg_model_eckart_type(0, 0, 0.5, 1, 0.2, &raw) == KG_OK);
  const Model e(raw);
  const double alphas[] = {0.2, 0.1, 0.05};
  kg_approx_row rows[3];
  REQUIRE(kg_approximation_error(e.get(), 0, 1, 3, KG_SIGN_PLUS, 1.0, alphas, 3, rows) == KG_OK);
  CHECK(rows[0].abs_error > rows[1].abs_error);
  CHECK(rows[1].abs_error > rows[2].abs_error);

  REQUIRE(kg_model_woods_saxon(0.05, 1.0, &raw) == KG_OK);
  const Model ws(raw);
  double closed = 0.0;
  CHECK(kg_nonrelativistic_energy(ws.get(), 1, 0, 3, 1.0, KG_NONREL_2V, &closed) == KG_OK);
  CHECK(closed == doctest::Approx(-0.18));
  CHECK(kg_nonrelativistic_energy(ws.get(), 0, 0, 3, 1.0, KG_NONREL_2V, &closed) == KG_ERR_PARAMETER);
}
