#include "storyline/model.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "json.hpp"

#include "storyline/perm.hpp"

namespace storyline {

Storyline::Storyline(std::vector<std::string> characters, std::vector<Event> events)
    : characters_(std::move(characters)), events_(std::move(events)) {
    const int k = character_count();
    std::map<std::string, int> seen;
    for (int i = 0; i < k; ++i) {
        if (characters_[i].empty()) {
            throw ValidationError("validation error: empty character name");
        }
        if (!seen.emplace(characters_[i], i).second) {
            throw ValidationError("validation error: duplicate character name '" + characters_[i] + "'");
        }
    }
    for (std::size_t e = 0; e < events_.size(); ++e) {
        auto& ev = events_[e];
        std::sort(ev.members.begin(), ev.members.end());
        if (ev.members.size() < 2) {
            throw ValidationError("validation error: event " + std::to_string(e) +
                                  " has fewer than 2 members");
        }
        for (std::size_t i = 0; i < ev.members.size(); ++i) {
            if (ev.members[i] < 0 || ev.members[i] >= k) {
                throw ValidationError("validation error: event " + std::to_string(e) +
                                      " references a character outside 0..k-1");
            }
            if (i > 0 && ev.members[i] == ev.members[i - 1]) {
                throw ValidationError("validation error: event " + std::to_string(e) +
                                      " lists a member twice");
            }
        }
        if (ev.start < 0) {
            throw ValidationError("validation error: event " + std::to_string(e) +
                                  " has a negative start time");
        }
        if (ev.start > ev.end) {
            throw ValidationError("validation error: event " + std::to_string(e) +
                                  " has start > end");
        }
    }
    // Closed intervals of the same character must not overlap.
    std::vector<std::vector<std::pair<std::pair<int, int>, int>>> per_char(k);
    for (std::size_t e = 0; e < events_.size(); ++e) {
        for (int member : events_[e].members) {
            per_char[member].push_back({{events_[e].start, events_[e].end}, static_cast<int>(e)});
        }
    }
    for (int c = 0; c < k; ++c) {
        auto& intervals = per_char[c];
        std::sort(intervals.begin(), intervals.end());
        for (std::size_t i = 1; i < intervals.size(); ++i) {
            if (intervals[i].first.first <= intervals[i - 1].first.second) {
                throw ValidationError("validation error: overlapping events for character '" +
                                      characters_[c] + "' (events " +
                                      std::to_string(intervals[i - 1].second) + " and " +
                                      std::to_string(intervals[i].second) + ")");
            }
        }
    }
}

int Storyline::first_column() const {
    if (events_.empty()) return 0;
    int lo = events_.front().start;
    for (const auto& ev : events_) lo = std::min(lo, ev.start);
    return lo - 1;
}

int Storyline::last_column() const {
    if (events_.empty()) return 1;
    int hi = events_.front().end;
    for (const auto& ev : events_) hi = std::max(hi, ev.end);
    return hi + 1;
}

int WiringDiagram::column_of(int time) const {
    const auto it = std::lower_bound(times.begin(), times.end(), time);
    if (it == times.end() || *it != time) return -1;
    return static_cast<int>(it - times.begin());
}

const char* to_string(SolverTag tag) {
    switch (tag) {
        case SolverTag::exact: return "exact";
        case SolverTag::tree_heuristic: return "tree_heuristic";
        case SolverTag::external: return "external";
    }
    return "external";
}

VerifyResult verify_solution(const Storyline& s, const WiringDiagram& d) {
    const int k = s.character_count();
    if (d.times.empty() || d.times.size() != d.orders.size()) {
        throw ValidationError("dimension mismatch: diagram needs one order per time column");
    }
    for (std::size_t i = 1; i < d.times.size(); ++i) {
        if (d.times[i] <= d.times[i - 1]) {
            throw ValidationError("dimension mismatch: diagram times must be strictly increasing");
        }
    }
    std::vector<Ordering> columns;
    columns.reserve(d.orders.size());
    for (const auto& order : d.orders) {
        if (static_cast<int>(order.size()) != k) {
            throw ValidationError("dimension mismatch: column order size differs from character count");
        }
        try {
            columns.emplace_back(order);
        } catch (const std::invalid_argument&) {
            throw ValidationError("dimension mismatch: column order is not a permutation of 0..k-1");
        }
    }

    VerifyResult result;
    result.valid = true;
    for (int e = 0; e < s.event_count(); ++e) {
        const Event& ev = s.events()[e];
        for (int t = ev.start; t <= ev.end; ++t) {
            const int col = d.column_of(t);
            if (col < 0) {
                throw ValidationError("dimension mismatch: diagram misses time " + std::to_string(t) +
                                      " inside event " + std::to_string(e));
            }
            int lo = k, hi = -1;
            for (int member : ev.members) {
                const int r = columns[col].rank_of(member);
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
            if (hi - lo + 1 != static_cast<int>(ev.members.size())) {
                result.valid = false;
                result.violations.push_back({e, t});
            }
        }
    }
    for (std::size_t c = 1; c < columns.size(); ++c) {
        result.crossings += count_inversions(columns[c - 1], columns[c]);
    }
    return result;
}

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw ValidationError(std::string("syntax error: ") + err.what());
    }
}

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw ValidationError(std::string("validation error: ") + what + " must be an integer");
    }
    return j.get<int>();
}

}  // namespace

Storyline parse_storyline(const std::string& text) {
    const json root = parse_json(text);
    if (!root.is_object() || !root.contains("characters") || !root.contains("events")) {
        throw ValidationError("validation error: storyline needs 'characters' and 'events'");
    }
    std::vector<std::string> characters;
    std::map<std::string, int> index_of;
    for (const auto& name : root.at("characters")) {
        if (!name.is_string()) throw ValidationError("validation error: character names must be strings");
        characters.push_back(name.get<std::string>());
        index_of.emplace(characters.back(), static_cast<int>(characters.size()) - 1);
    }
    std::vector<Event> events;
    for (const auto& ev : root.at("events")) {
        Event event;
        if (!ev.is_object() || !ev.contains("members") || !ev.contains("start") || !ev.contains("end")) {
            throw ValidationError("validation error: event needs 'members', 'start' and 'end'");
        }
        for (const auto& member : ev.at("members")) {
            const auto name = member.get<std::string>();
            const auto it = index_of.find(name);
            if (it == index_of.end()) {
                throw ValidationError("validation error: unknown character name '" + name + "'");
            }
            event.members.push_back(it->second);
        }
        event.start = require_int(ev.at("start"), "event start");
        event.end = require_int(ev.at("end"), "event end");
        events.push_back(std::move(event));
    }
    return Storyline(std::move(characters), std::move(events));
}

std::string serialize_storyline(const Storyline& s) {
    json root;
    root["characters"] = s.characters();
    root["events"] = json::array();
    for (const auto& ev : s.events()) {
        json members = json::array();
        for (int member : ev.members) members.push_back(s.characters()[member]);
        root["events"].push_back({{"members", members}, {"start", ev.start}, {"end", ev.end}});
    }
    return root.dump(2) + "\n";
}

WiringDiagram diagram_from_json(const std::string& text, const Storyline& s) {
    const json root = parse_json(text);
    if (!root.is_object() || !root.contains("times") || !root.contains("orders")) {
        throw ValidationError("validation error: diagram needs 'times' and 'orders'");
    }
    std::map<std::string, int> index_of;
    for (int i = 0; i < s.character_count(); ++i) index_of.emplace(s.characters()[i], i);

    WiringDiagram d;
    for (const auto& t : root.at("times")) d.times.push_back(require_int(t, "diagram time"));
    for (const auto& order : root.at("orders")) {
        std::vector<int> column;
        for (const auto& name : order) {
            const auto it = index_of.find(name.get<std::string>());
            if (it == index_of.end()) {
                throw ValidationError("validation error: unknown character name '" +
                                      name.get<std::string>() + "'");
            }
            column.push_back(it->second);
        }
        d.orders.push_back(std::move(column));
    }
    if (d.times.size() != d.orders.size()) {
        throw ValidationError("validation error: diagram needs one order per time");
    }
    return d;
}

std::string diagram_to_json(const WiringDiagram& d, const Storyline& s) {
    json root;
    root["times"] = d.times;
    root["orders"] = json::array();
    for (const auto& order : d.orders) {
        json column = json::array();
        for (int character : order) column.push_back(s.characters()[character]);
        root["orders"].push_back(std::move(column));
    }
    return root.dump(2) + "\n";
}

}  // namespace storyline
