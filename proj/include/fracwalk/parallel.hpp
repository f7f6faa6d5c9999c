#pragma once

namespace fracwalk {

// Worker-count control.  Precedence: explicit request > FRACWALK_THREADS
// env var > OpenMP default.  A request of 0 means "no preference".
void set_threads(int requested);
int max_threads();

}  // namespace fracwalk
