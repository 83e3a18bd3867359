#pragma once

namespace blescope {

// Shift applied to raw dBm so stored RSSI is non-negative and 0 doubles as
// "not detected". Values at or below -kRssiShiftDb clamp to 0.
constexpr double kRssiShiftDb = 100.0;

double shift_rssi(double dbm, double shift = kRssiShiftDb);

// Inverse for detected beacons (shifted value > 0).
double unshift_rssi(double shifted, double shift = kRssiShiftDb);

}  // namespace blescope
