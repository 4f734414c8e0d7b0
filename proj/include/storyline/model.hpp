#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace storyline {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A meeting: two or more characters over a closed integer time interval.
struct Event {
    std::vector<int> members;  // distinct character indices, kept sorted
    int start = 0;
    int end = 0;

    bool operator==(const Event&) const = default;
    bool active_at(int time) const { return start <= time && time <= end; }
};

// The problem instance. Immutable after construction; the constructor
// enforces the validity rules (member sets of size >= 2 inside the character
// range, start <= end, and no character in two overlapping events).
class Storyline {
public:
    Storyline(std::vector<std::string> characters, std::vector<Event> events);

    int character_count() const { return static_cast<int>(characters_.size()); }
    int event_count() const { return static_cast<int>(events_.size()); }
    const std::vector<std::string>& characters() const { return characters_; }
    const std::vector<Event>& events() const { return events_; }

    // Diagram columns are padded one step past the first/last event; [0, 1]
    // for an event-free storyline.
    int first_column() const;
    int last_column() const;

    bool operator==(const Storyline&) const = default;

private:
    std::vector<std::string> characters_;
    std::vector<Event> events_;
};

// One total vertical order of characters per integer time column.
// orders[c][rank] = character index, top first. times are contiguous.
struct WiringDiagram {
    std::vector<int> times;
    std::vector<std::vector<int>> orders;

    bool operator==(const WiringDiagram&) const = default;
    int column_of(int time) const;  // -1 when absent
};

enum class SolverTag { exact, tree_heuristic, external };
const char* to_string(SolverTag tag);

struct Solution {
    WiringDiagram diagram;
    long long crossings = 0;
    SolverTag solver_tag = SolverTag::external;
};

struct Violation {
    int event_index = 0;
    int time = 0;
    bool operator==(const Violation&) const = default;
};

struct VerifyResult {
    bool valid = false;
    long long crossings = 0;
    std::vector<Violation> violations;
};

// Checks that every event's members occupy contiguous ranks at every column
// of its interval, and recounts crossings as the sum of inversion distances
// between consecutive columns. Pure; throws ValidationError only when the
// diagram does not match the storyline dimensionally.
VerifyResult verify_solution(const Storyline& s, const WiringDiagram& d);

// JSON interchange (see README for the format). Both serializers emit
// pretty-printed text with sorted keys, byte-stable for a given value.
Storyline parse_storyline(const std::string& text);
std::string serialize_storyline(const Storyline& s);
WiringDiagram diagram_from_json(const std::string& text, const Storyline& s);
std::string diagram_to_json(const WiringDiagram& d, const Storyline& s);

}  // namespace storyline
