#include "bsv/ampleness.hpp"
#include "bsv/fiber.hpp"
#include "bsv/fixtures.hpp"
#include "bsv/freeness.hpp"
#include "bsv/quadrics.hpp"
#include "bsv/sections.hpp"

#include <benchmark/benchmark.h>

#include <filesystem>

using namespace bsv;

namespace {

std::filesystem::path const kFixtures{BSV_FIXTURE_DIR};

std::vector<MultiPoly> const& relations() {
    static auto const r = labeled_sequence(parse_poly_file(read_text_file(kFixtures / "table1.poly")), "f", 27, quadric_table());
    return r;
}

std::vector<MultiPoly> const& st_basis() {
    static auto const b = labeled_sequence(parse_poly_file(read_text_file(kFixtures / "st_basis.poly")), "b", 10, st_cubic_table());
    return b;
}

void BM_ParseTable1(benchmark::State& state) {
    std::string const text = read_text_file(kFixtures / "table1.poly");
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_poly_file(text));
}
BENCHMARK(BM_ParseTable1);

void BM_CoefficientRank(benchmark::State& state) {
    PolyMatrix const m = quadrics::coefficient_matrix(relations());
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_over_fraction_field(m));
}
BENCHMARK(BM_CoefficientRank)->Unit(benchmark::kMillisecond);

void BM_SubstitutionKernel(benchmark::State& state) {
    for (auto _ : state) {
        quadrics::SubstitutionMatrix const m = quadrics::substitution_matrix(st_basis());
        benchmark::DoNotOptimize(quadrics::relation_space(m));
    }
}
BENCHMARK(BM_SubstitutionKernel)->Unit(benchmark::kMillisecond);

void BM_STBasisCertificate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sections::st_basis_certificate(st_basis()));
}
BENCHMARK(BM_STBasisCertificate)->Unit(benchmark::kMillisecond);

void BM_NormalFormX5Power(benchmark::State& state) {
    freeness::RewriteSystem const rs(relations());
    MultiPoly const p = MultiPoly::variable(quadric_table(), "x5", static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rs.normal_form(p));
}
BENCHMARK(BM_NormalFormX5Power)->DenseRange(2, 6, 2);

void BM_MultiplicationMatrices(benchmark::State& state) {
    freeness::RewriteSystem const rs(relations());
    for (auto _ : state)
        for (int i : freeness::fibre_variables())
            benchmark::DoNotOptimize(freeness::multiplication_matrix(rs, i));
}
BENCHMARK(BM_MultiplicationMatrices)->Unit(benchmark::kMillisecond);

void BM_FreenessCertificate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(freeness::freeness_certificate(relations()));
}
BENCHMARK(BM_FreenessCertificate)->Unit(benchmark::kMillisecond);

void BM_JacobianDeterminants(benchmark::State& state) {
    for (auto _ : state)
        for (auto const& spec : fiber::fixed_point_specs())
            benchmark::DoNotOptimize(fiber::smoothness_certificate(spec, relations()));
}
BENCHMARK(BM_JacobianDeterminants);

void BM_TwistGrid(benchmark::State& state) {
    ampleness::IntersectionData const data(parse_intersection_table(read_text_file(kFixtures / "intersections.tbl")));
    for (auto _ : state)
        for (long an = 11; an <= 19; ++an)
            for (long bn = 11; bn <= 40; ++bn) {
                BigRational a(an, 20), b(bn, 10);
                a.canonicalize();
                b.canonicalize();
                benchmark::DoNotOptimize(ampleness::contraction_twist_certificate(data, a, b));
            }
}
BENCHMARK(BM_TwistGrid)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
