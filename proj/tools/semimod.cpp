// semimod: run, validate or export session files.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "semimod/session.hpp"

namespace {

using namespace semimod;

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    bool open(const std::string& path) {
        if (path.empty()) return true;
        file.open(path, std::ios::binary | std::ios::trunc);
        if (!file) return false;
        stream = &file;
        return true;
    }
};

void emit(std::ostream& out, const CommandRecord& rec, bool human) {
    if (human) out << render_human(rec);
    else out << record_to_json(rec).dump() << "\n";
}

int finish(Output& out, int code) {
    out.stream->flush();
    if (!*out.stream) {
        std::cerr << "semimod: failed writing output\n";
        return 2;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-divisor and content analysis of finite modules over semigroup rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string session_path, format = "json-lines", output_path;
    std::optional<std::uint64_t> budget;

    auto* run = app.add_subcommand("run", "Execute every command of a session file");
    run->add_option("session", session_path, "Session file")->required();
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json-lines", "human"}));
    run->add_option("--budget", budget, "Window budget (overrides settings and SEMIMOD_BUDGET)");
    run->add_option("--output,-o", output_path, "Write records to this file instead of stdout");

    auto* validate = app.add_subcommand("validate", "Load and validate a session file");
    validate->add_option("session", session_path, "Session file")->required();

    auto* exporter = app.add_subcommand("export", "Print the session with every object as explicit tables");
    exporter->add_option("session", session_path, "Session file")->required();
    exporter->add_option("--output,-o", output_path, "Write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    if (!out.open(output_path)) {
        std::cerr << "semimod: cannot write " << output_path << "\n";
        return 2;
    }
    const bool human = format == "human";

    std::optional<Session> session;
    try {
        session.emplace(Session::load(session_path, budget));
    } catch (const Error& e) {
        emit(*out.stream, load_error_record(e), human);
        return finish(out, 2);
    }

    if (*validate) {
        Json summary{{"status", "ok"},
                     {"rings", session->ring_names().size()},
                     {"monoids", session->monoid_names().size()},
                     {"modules", session->module_names().size()},
                     {"submodules", session->submodule_names().size()},
                     {"series", session->series_names().size()},
                     {"commands", session->commands().size()}};
        *out.stream << summary.dump() << "\n";
        return finish(out, 0);
    }
    if (*exporter) {
        *out.stream << session->export_json().dump(2) << "\n";
        return finish(out, 0);
    }

    std::vector<CommandRecord> records;
    for (std::size_t i = 0; i < session->commands().size(); ++i) {
        records.push_back(execute(*session, session->commands()[i], i));
        emit(*out.stream, records.back(), human);
    }
    return finish(out, exit_code(records));
}
