#include <iostream>

#include <infcrystal/acceptance.hpp>

int main() {
    int failed = 0;
    for (const auto& [name, run] : infcrystal::acceptance_suites()) {
        auto r = run();
        std::cout << r.line() << std::endl;
        if (!r.pass()) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}
