#include <doctest.h>

#include "ccc/ensemble.hpp"
#include "ccc/error.hpp"

using namespace ccc;

namespace {

const ModelSpec kSmallCm = ModelSpec::parse("directed_cm:n=800,alpha=3");

}  // namespace

TEST_SUITE("ensemble") {
    TEST_CASE("one replicate reproduces its curve with zero spread") {
        const auto a = MeasureSpec::pagerank(), b = MeasureSpec::in_degree();
        const EnsembleSummary s = run_ensemble(kSmallCm, a, b, 1, 17);
        const CccCurve c = replicate_curve(kSmallCm, a, b, 17, 0);
        CHECK(s.mean == c.values);
        for (double x : s.std) CHECK(x == 0.0);
        CHECK(s.replicates == 1);
        CHECK(s.n == 800);
    }

    TEST_CASE("a measure against itself gives the identity with zero spread") {
        const auto pr = MeasureSpec::pagerank();
        const EnsembleSummary s = run_ensemble(kSmallCm, pr, pr, 4, 3);
        CHECK(s.mean == reference_curve(800, Reference::identity));
        for (double x : s.std) CHECK(x == 0.0);
    }

    TEST_CASE("summary invariants") {
        const EnsembleSummary s =
            run_ensemble(ModelSpec::parse("undirected_cm:n=600"), MeasureSpec::total_degree(), MeasureSpec::harmonic(), 6, 5);
        const double n = static_cast<double>(s.n);
        for (std::size_t k = 1; k <= s.n; ++k) {
            const double lower = 2 * k > s.n ? (2.0 * k - n) / n : 0.0;
            CHECK(s.mean[k - 1] <= k / n + 1e-12);
            CHECK(s.mean[k - 1] >= lower - 1e-12);
            CHECK(s.std[k - 1] >= 0.0);
        }
        CHECK(s.std.back() == 0.0);
        CHECK(s.mean.back() == doctest::Approx(1.0));
    }

    TEST_CASE("population standard deviation") {
        CccCurve a, b;
        a.n = b.n = 2;
        a.values = {0.0, 1.0};
        b.values = {0.5, 1.0};
        const EnsembleSummary s = summarize({a, b});
        CHECK(s.mean[0] == 0.25);
        CHECK(s.std[0] == 0.25);
        CHECK(s.std[1] == 0.0);
        CHECK_THROWS_AS(summarize({}), InputError);
        CccCurve c;
        c.n = 3;
        c.values = {0, 0, 1};
        CHECK_THROWS_AS(summarize({a, c}), InputError);
    }

    TEST_CASE("serial and parallel runs are identical") {
        const auto a = MeasureSpec::pagerank(), b = MeasureSpec::betweenness(4);
        const EnsembleSummary serial = run_ensemble(kSmallCm, a, b, 6, 99, 1);
        for (unsigned threads : {2u, 3u, 8u}) {
            const EnsembleSummary parallel = run_ensemble(kSmallCm, a, b, 6, 99, threads);
            CHECK(parallel.mean == serial.mean);
            CHECK(parallel.std == serial.std);
        }
    }

    TEST_CASE("adding replicates leaves earlier replicates unchanged") {
        const auto a = MeasureSpec::katz(), b = MeasureSpec::in_degree();
        const std::vector<CccCurve> first{replicate_curve(kSmallCm, a, b, 7, 0), replicate_curve(kSmallCm, a, b, 7, 1)};
        const EnsembleSummary two = run_ensemble(kSmallCm, a, b, 2, 7);
        const EnsembleSummary expected = summarize(first);
        CHECK(two.mean == expected.mean);
        CHECK(two.std == expected.std);
        // Replicate r depends on r alone, not on how many replicates run.
        CHECK(replicate_curve(kSmallCm, a, b, 7, 1).values == first[1].values);
        CHECK(replicate_curve(kSmallCm, a, b, 7, 2).values != first[1].values);
    }

    TEST_CASE("replicate failures name the replicate") {
        // Eigenvector centrality on an edgeless graphon sample is degenerate.
        const ModelSpec empty = ModelSpec::parse("graphon:kernel=threshold,n=20,c_high=0,c_low=0");
        try {
            (void)run_ensemble(empty, MeasureSpec::eigenvector(), MeasureSpec::in_degree(), 3, 1, 1);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("replicate 0") != std::string::npos);
        }
        CHECK_THROWS_AS(run_ensemble(kSmallCm, MeasureSpec::in_degree(), MeasureSpec::in_degree(), 0, 1), InputError);
    }
}
