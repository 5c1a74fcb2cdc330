#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gl2 {

// Outcome of a verification routine, with human-readable witnesses of each failure.
struct CheckReport {
    bool pass = true;
    std::int64_t cases = 0;
    std::vector<std::string> counterexamples;

    void fail(std::string what)
    {
        pass = false;
        counterexamples.push_back(std::move(what));
    }
    // Records one checked case; a false condition becomes a counterexample.
    void expect(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok)
            fail(what);
    }
    void absorb(const CheckReport& other)
    {
        cases += other.cases;
        if (!other.pass)
            pass = false;
        counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                               other.counterexamples.end());
    }
};

}  // namespace gl2
