#include "levygof/datasets.hpp"

namespace levygof {

const Sample& rainfall_data() {
  // Weighted average January rainfall (mm), India, 1981-2011.
  static const Sample data = {
      29.3, 23.8, 18.5, 19,   23.2, 15.5, 13.2, 10.4, 15.4, 16,   14.3,
      16,   18.2, 25,   31.3, 22.9, 14.3, 16.4, 13.7, 18.4, 7.3,  15.7,
      7.6,  25.7, 28.1, 17.7, 1.7,  18.4, 12,   7.5,  6.8};
  return data;
}

const Sample& hillside_data() {
  // Well yields (gal/min/ft), Hillside location near Bel Air, Maryland.
  static const Sample data = {
      0.220, 1.330, 0.750, 0.180, 0.010, 0.160, 0.280, 0.870, 0.020,
      0.100, 0.030, 0.050, 0.860, 5.000, 0.040, 4.000, 0.370, 0.380,
      0.110, 0.100, 0.020, 0.010, 0.050, 0.170, 0.460, 0.160, 1.330,
      0.140, 2.860, 0.130, 7.500, 4.500, 0.030, 0.003, 0.050, 0.020,
      0.040, 0.750, 0.520, 5.000, 0.350};
  return data;
}

Sample hillside_data_inverted() {
  Sample out = hillside_data();
  for (auto& v : out) v = 1.0 / v;
  return out;
}

}  // namespace levygof
