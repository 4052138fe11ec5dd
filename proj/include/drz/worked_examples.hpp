#ifndef DRZ_WORKED_EXAMPLES_HPP
#define DRZ_WORKED_EXAMPLES_HPP

#include <string>
#include <vector>

namespace drz {

struct ExampleResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> details;  // one line per sub-check
};

/// Recomputes the six embedded rational worked examples and compares
/// bit-exactly against frozen expected values. `tamper` flips one expected
/// value so the harness can prove to itself that mismatches are detected.
std::vector<ExampleResult> run_worked_examples(bool tamper = false);

}  // namespace drz

#endif
