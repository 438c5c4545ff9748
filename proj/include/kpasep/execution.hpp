#pragma once

namespace kpasep {

/// Kernels that fan out over independent work items take this flag. The serial
/// path is the reference; the parallel path must produce identical results.
enum class Execution { serial, parallel };

}  // namespace kpasep
