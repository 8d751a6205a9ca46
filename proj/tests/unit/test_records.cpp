#include <doctest.h>

#include "k2t/extremal.hpp"
#include "k2t/moves.hpp"
#include "k2t/records.hpp"
#include "k2t/spectral.hpp"

using namespace k2t;

TEST_CASE("twelve significant digits") {
  CHECK(format_real(4.162277660168379) == "4.16227766017");
  CHECK(format_real(3.0) == "3");
  CHECK(format_real(-0.5) == "-0.5");
  CHECK(format_real(1.0e-20) == "1e-20");
  CHECK(round_significant(4.162277660168379) == 4.16227766017);
}

TEST_CASE("CSV rows") {
  const SearchRecord r = make_record(build_F(3, 9), 3, ft_mu_exact(3, 9));
  const std::string row = to_csv_row(r);
  CHECK(row.rfind(r.graph6 + ",9,3,3.88202054486,", 0) == 0);
  CHECK(row.substr(row.size() - 5) == ",true");
  CHECK(std::string(kSearchCsvHeader) == "graph6,n,t,mu,gap_upper,gap_ysh,is_ft");

  const SearchRecord s = make_record(star_graph(6), 4, spectral_radius(star_graph(6)).mu);
  const std::string srow = to_csv_row(s);
  CHECK(srow.find(",,false") != std::string::npos);
}

TEST_CASE("JSONL rows") {
  SearchRecord r = make_record(build_F(2, 5), 2, ft_mu_exact(2, 5));
  r.move_trace.push_back(make_edge_addition(1, 2));
  const std::string line = to_jsonl(r);
  CHECK(line.rfind(R"({"graph6":"D{c","n":5,"t":2,"mu":2.56155281281,)", 0) == 0);
  CHECK(line.find(R"("gap_ysh":null)") != std::string::npos);
  CHECK(line.find(R"j("is_ft":true,"violated":false,"move_trace":["add_edge(+1-2)"]})j") != std::string::npos);
}
