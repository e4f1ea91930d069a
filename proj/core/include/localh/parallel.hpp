#pragma once

namespace localh {

/// Worker count for internal sweeps: LOCALH_THREADS if set to a positive
/// integer, else std::thread::hardware_concurrency(), never less than 1.
int default_thread_count();

}  // namespace localh
