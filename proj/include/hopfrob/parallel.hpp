#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace hopfrob {

enum class Exec { Serial, Parallel };

// Thread count taken from HOPFROB_THREADS when set, else the OpenMP default.
int thread_count();

// Runs body(i) for i in [0, n).  Iterations must be independent.
void parallel_for(int n, const std::function<void(int)>& body, Exec exec = Exec::Parallel);

// Evaluates probe(i) for i in [0, n) and returns the smallest i whose probe
// reports a witness, together with that witness.  The answer is independent
// of scheduling, so serial and parallel runs agree exactly.
template <class W>
std::optional<std::pair<int, W>> first_failure(int n, const std::function<std::optional<W>(int)>& probe,
                                               Exec exec = Exec::Parallel) {
    std::vector<std::optional<W>> found(n);
    parallel_for(n, [&](int i) { found[i] = probe(i); }, exec);
    for (int i = 0; i < n; ++i)
        if (found[i]) return std::make_pair(i, *found[i]);
    return std::nullopt;
}

}  // namespace hopfrob
