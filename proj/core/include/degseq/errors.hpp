#pragma once

#include <stdexcept>
#include <string>

namespace degseq {

// Error tags used across the library; the CLI maps them to exit code 1 and
// reports the tag verbatim.
enum class Errc {
    odd_sum,
    underflow,
    too_large,
    not_graphic,
    invalid_region,
    invalid_trail,
    not_a_partition,
    neighborhoods_differ,
    neighborhoods_equal,
    no_reducing_vertex,
    precondition_violated,
    case_mismatch,
    internal_invariant,
    odd_r,
    infeasible,
    sigma_outside_window,
    parity_impossible,
    too_few_edges,
    not_an_edge,
    already_an_edge,
    degenerate_vertices,
    invalid_argument,
};

const char* errc_tag(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* tag() const noexcept { return errc_tag(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace degseq
