// Pick the largest code class for n = 12, corrupt one codeword with a
// deletion at position 3 and an erasure at position 8, then decode it.

#include "vtcode/vtcode.hpp"

#include <iostream>

int main()
{
    const auto params = vtcode::best_params(12);
    const auto book = vtcode::enumerate(params);
    std::cout << "VT_{" << params.a1 << "," << params.a2 << "}(12) has " << book.size()
              << " words, redundancy " << vtcode::redundancy(book) << " bits\n";

    const auto& x = book.words[book.size() / 2];
    const auto y = vtcode::corrupt(x, {3, 8});
    const auto outcome = vtcode::decode(y, params);

    std::cout << "sent     " << x.to_string() << '\n'
              << "received " << y.to_string() << '\n';
    if (!outcome) {
        std::cout << "decode failed: " << vtcode::to_string(outcome.failure().reason) << '\n';
        return 1;
    }
    std::cout << "decoded  " << outcome.recovered().word.to_string() << " (inserted at k="
              << outcome.recovered().insertion_index << ")\n";
    return outcome.recovered().word == x ? 0 : 1;
}
