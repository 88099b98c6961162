#pragma once

namespace fockpw {

/// Execution policy for the data-parallel kernels.  `serial` is the reference path.
enum class Exec { serial, parallel };

}  // namespace fockpw
