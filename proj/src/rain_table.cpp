#include <sstream>
#include <stdexcept>
#include <string>

#include "iabsim/channel.hpp"

namespace iabsim {

namespace {

// Mirror of data/rain_coefficients.csv, compiled in so the binary needs no
// runtime data path. Config-level coefficient overrides take precedence over
// this table at the scenario layer.
constexpr const char* kRainCoefficientsCsv = R"(# Rain specific-attenuation power-law coefficients, horizontal polarization.
# gamma = k * R^alpha  [dB/km], R in mm/hr.
# freq_ghz,k,alpha
10,0.01217,1.2571
15,0.04481,1.1233
20,0.09164,1.0568
25,0.1571,0.9991
28,0.2051,0.9679
30,0.2403,0.9485
35,0.3374,0.8989
38,0.4001,0.8816
40,0.4431,0.8673
)";

std::vector<RainTableRow> parse_table(const char* text) {
  std::vector<RainTableRow> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    RainTableRow row{};
    char comma1 = 0;
    char comma2 = 0;
    std::istringstream fields(line);
    if (!(fields >> row.fc_ghz >> comma1 >> row.k >> comma2 >>
          row.alpha_rain) ||
        comma1 != ',' || comma2 != ',') {
      throw std::runtime_error("malformed rain coefficient row: " + line);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

const std::vector<RainTableRow>& rain_coefficient_table() {
  static const std::vector<RainTableRow> table =
      parse_table(kRainCoefficientsCsv);
  return table;
}

RainCoefficients rain_coefficients_for(double fc_ghz) {
  const auto& table = rain_coefficient_table();
  if (fc_ghz <= table.front().fc_ghz) {
    return {table.front().k, table.front().alpha_rain};
  }
  if (fc_ghz >= table.back().fc_ghz) {
    return {table.back().k, table.back().alpha_rain};
  }
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (fc_ghz <= table[i].fc_ghz) {
      const auto& lo = table[i - 1];
      const auto& hi = table[i];
      const double t = (fc_ghz - lo.fc_ghz) / (hi.fc_ghz - lo.fc_ghz);
      return {lo.k + t * (hi.k - lo.k),
              lo.alpha_rain + t * (hi.alpha_rain - lo.alpha_rain)};
    }
  }
  return {table.back().k, table.back().alpha_rain};
}

}  // namespace iabsim
