#pragma once

namespace cgf {

/// Serial kernels are the reference; parallel ones must agree with them exactly.
enum class Exec { serial, parallel };

}  // namespace cgf
