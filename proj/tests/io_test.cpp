#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "nabla_frac/io.hpp"
#include "test_support.hpp"

namespace nabla_frac {
namespace {

TEST(GridCsv, RoundTripIsExact) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::int64_t> base(-500, 500);
  for (int trial = 0; trial < 25; ++trial) {
    auto values = testing::uniform_values(rng, 1 + trial * 7, -1e6, 1e6);
    values[0] *= 1e-300;
    const GridFunction u(base(rng), values);
    std::stringstream buffer;
    io::write_grid_csv(buffer, u);
    EXPECT_EQ(io::read_grid_csv(buffer), u);
  }
}

TEST(GridCsv, OperatorOutputReadsBack) {
  const OperatorResult r{-4, {0.0, 0.1, 1.0 / 3.0, -2.5}};
  std::stringstream buffer;
  io::write_operator_csv(buffer, r);
  EXPECT_EQ(buffer.str().rfind("# base=-4\nindex,value\n", 0), 0u);
  EXPECT_EQ(io::read_grid_csv(buffer), r.to_grid_function());
}

TEST(GridCsv, ToleratesWhitespaceCommentsAndCrlf) {
  std::stringstream in("# produced elsewhere\r\nindex, value\r\n 3 , 1.5\r\n\r\n4,2\r\n");
  const GridFunction u = io::read_grid_csv(in);
  EXPECT_EQ(u.base(), 3);
  EXPECT_EQ(u(4), 2.0);
}

TEST(GridCsv, MalformedInputReportsLine) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::stringstream in(text);
    try {
      io::read_grid_csv(in);
    } catch (const CsvError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("index,value\n0,1\n1,abc\n"), 3u);
  EXPECT_EQ(line_of("index,value\n0,1\n2,1\n"), 3u);
  EXPECT_EQ(line_of("index,value\n0,1,2\n"), 2u);
  EXPECT_EQ(line_of("index,value\n0.5,1\n"), 2u);
  EXPECT_EQ(line_of("index,value\n0,nan\n"), 2u);
  EXPECT_EQ(line_of("t,u\n0,1\n"), 1u);
  EXPECT_EQ(line_of("index,value\n"), 1u);
  EXPECT_EQ(line_of(""), 0u + 0u) << "empty input reports line 0";
}

TEST(TraceCsv, ColumnsAndRows) {
  const auto trace = solve_lagged(Coefficients::constant(0.0), 0.5, 2, 1.0, 3);
  std::stringstream out;
  io::write_trace_csv(out, trace);
  EXPECT_EQ(out.str(),
            "n,t,u,residual,envelope\n"
            "0,2,1,0,1\n"
            "1,3,0.5,0,0.5\n"
            "2,4,0.375,0,0.375\n"
            "3,5,0.3125,0,0.3125\n");
}

TEST(TraceJson, CarriesMetadata) {
  const auto trace = solve_lagged(Coefficients::constant(-0.25), 0.5, 0, 2.0, 4);
  const auto j = io::trace_to_json(trace, {{"nu", 0.5}, {"base", 0}, {"u0", 2.0}, {"coefficients", "-0.25"}});
  EXPECT_EQ(j.at("problem").at("coefficients"), "-0.25");
  EXPECT_EQ(j.at("u").size(), 5u);
  EXPECT_EQ(j.at("t").back(), 4);
  EXPECT_EQ(j.at("u")[0], 2.0);
}

TEST(ScanCsv, Rows) {
  std::vector<ScanCell> cells(2);
  cells[0] = {0.5, -0.25, true, {DecayClass::tends_to_zero, -1.5}};
  cells[1] = {0.5, 0.5, false, {DecayClass::unbounded, 12.0}};
  std::stringstream out;
  io::write_scan_csv(out, cells);
  EXPECT_EQ(out.str(), "nu,c,decay_class,tail_stat\n0.5,-0.25,tends_to_zero,-1.5\n0.5,0.5,unbounded,12\n");
}

TEST(ReportJson, Fields) {
  const auto report = bound_check(Coefficients::constant(-0.5), 0.5, 0, 40);
  const auto j = io::report_to_json(report);
  EXPECT_TRUE(j.at("criterion_everywhere").get<bool>());
  EXPECT_TRUE(j.at("bound_everywhere").get<bool>());
  EXPECT_EQ(j.at("bound_ok").size(), 41u);
  EXPECT_EQ(j.at("criterion").size(), 40u);
  EXPECT_EQ(j.at("decay_class"), "tends_to_zero");
}

TEST(FormatReal, SeventeenSignificantDigits) {
  EXPECT_EQ(io::format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(io::format_real(-2.0), "-2");
  EXPECT_EQ(std::stod(io::format_real(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace nabla_frac
