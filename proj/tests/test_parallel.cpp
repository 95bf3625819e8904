#include "support/builders.hpp"

#include "rsg/bitangent.hpp"
#include "rsg/error.hpp"
#include "rsg/shipped_examples.hpp"
#include "rsg/sweep.hpp"

#include <doctest.h>
#include <omp.h>

#include <random>

using namespace rsg;

namespace {

std::vector<Graphic> corpus()
{
    std::vector<Graphic> out;
    for (const std::string& name : example_names()) out.push_back(example_graphic(name));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 6; ++i) out.push_back(build::random_graphic(rng));
    return out;
}

} // namespace

TEST_CASE("parallel bitangent search matches the serial reference")
{
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        for (const Graphic& g : corpus()) {
            BitangentOptions serial, parallel;
            serial.execution = Execution::Serial;
            serial.negative_slope_only = parallel.negative_slope_only = false;
            const auto a = doubly_tangent_lines(g, serial);
            const auto b = doubly_tangent_lines(g, parallel);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(a[i].angle == b[i].angle);
                CHECK(a[i].a == b[i].a);
                CHECK(a[i].b == b[i].b);
                CHECK(a[i].s == b[i].s);
                CHECK(a[i].u == b[i].u);
            }
        }
    }
}

TEST_CASE("parallel census batch matches the serial reference")
{
    std::vector<double> angles;
    for (int i = 1; i < 400; ++i) angles.push_back(1.5707963 * i / 400.0 + 1e-4);
    for (int threads : {1, 3}) {
        omp_set_num_threads(threads);
        for (const Graphic& g : corpus()) {
            std::vector<double> usable;
            for (double t : angles) {
                try {
                    critical_census(g, t);
                    usable.push_back(t);
                } catch (const Error&) {
                }
            }
            const auto a = critical_census_batch(g, usable, Execution::Serial);
            const auto b = critical_census_batch(g, usable, Execution::Parallel);
            REQUIRE(a.size() == usable.size());
            CHECK(a == b);
            for (std::size_t i = 0; i < usable.size(); ++i) CHECK(a[i] == critical_census(g, usable[i]));
        }
    }
}

TEST_CASE("batch errors surface deterministically")
{
    const Graphic g = example_graphic("wiggle");
    const double t = event_schedule(g).events.front().angle;
    const std::vector<double> angles{0.2, t, 0.9};
    CHECK_THROWS_AS(critical_census_batch(g, angles, Execution::Serial), Error);
    CHECK_THROWS_AS(critical_census_batch(g, angles, Execution::Parallel), Error);
}
