#pragma once

// Session files: named rings, monoids, modules, submodules and series plus a
// command list, in JSON.  Commands run in file order; each yields one record.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semimod/errors.hpp"
#include "semimod/module.hpp"
#include "semimod/monoid.hpp"
#include "semimod/ring.hpp"
#include "semimod/serialize.hpp"
#include "semimod/series.hpp"
#include "semimod/table.hpp"

namespace semimod {

inline constexpr const char* kVersion = "semimod 1.0.0";
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr const char* kBudgetEnv = "SEMIMOD_BUDGET";
// Commands whose name equals this variable fail with an invariant violation.
inline constexpr const char* kFaultEnv = "SEMIMOD_INJECT_FAULT";

// Malformed JSON, with the 1-based position of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A name that no definition of the required kind provides, or a cycle.
class ReferenceError : public Error {
public:
    using Error::Error;
};

struct SessionSettings {
    std::uint64_t budget = kDefaultBudget;
    Limits limits;
};

class Session {
public:
    // Parses, resolves every definition and validates it.  `budget_override`
    // wins over the file's settings, which win over SEMIMOD_BUDGET.
    static Session parse(const std::string& text, std::optional<std::uint64_t> budget_override = {});
    static Session load(const std::string& path, std::optional<std::uint64_t> budget_override = {});

    const SessionSettings& settings() const { return settings_; }
    const std::vector<Json>& commands() const { return commands_; }

    const RingPtr& ring(const std::string& name) const;
    const MonoidPtr& monoid(const std::string& name) const;
    const ModulePtr& module(const std::string& name) const;
    const Submodule& submodule(const std::string& name) const;
    const Series& series(const std::string& name) const;

    // Names in definition order, per kind.
    const std::vector<std::string>& ring_names() const { return ring_order_; }
    const std::vector<std::string>& monoid_names() const { return monoid_order_; }
    const std::vector<std::string>& module_names() const { return module_order_; }
    const std::vector<std::string>& submodule_names() const { return submodule_order_; }
    const std::vector<std::string>& series_names() const { return series_order_; }

    // Every object re-encoded as explicit tables / members / terms; parsing
    // the result gives structurally identical objects.
    Json export_json() const;

private:
    friend class SessionBuilder;
    SessionSettings settings_;
    std::vector<Json> commands_;
    std::map<std::string, RingPtr> rings_;
    std::map<std::string, MonoidPtr> monoids_;
    std::map<std::string, ModulePtr> modules_;
    std::map<std::string, Submodule> submodules_;
    std::map<std::string, Series> series_;
    std::vector<std::string> ring_order_, monoid_order_, module_order_, submodule_order_, series_order_;
};

enum class Status { ok, counterexample, error, skipped };

std::string to_string(Status s);

struct CommandRecord {
    std::size_t index = 0;
    Json command;
    Status status = Status::ok;
    Json payload = Json::object();  // hashed; never holds timings
    double elapsed_ms = 0.0;
};

// Never throws for command-level failures: they become error records.
CommandRecord execute(const Session& session, const Json& command, std::size_t index = 0);
std::vector<CommandRecord> execute_all(const Session& session);

// Record for a session that failed to load.
CommandRecord load_error_record(const std::exception& e);

// 16 hex digits of FNV-1a 64 over payload.dump().
std::string payload_hash(const Json& payload);

Json record_to_json(const CommandRecord& record);
std::string render_human(const CommandRecord& record);

// 1 if any counterexample, else 2 if any error, else 3 if any skip, else 0.
int exit_code(const std::vector<CommandRecord>& records);

std::uint64_t budget_from_environment();

}  // namespace semimod
