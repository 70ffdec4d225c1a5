#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace scenediff {

using json = nlohmann::json;

// FNV-1a over a byte range; used for checkpoint integrity checks.
uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ULL);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// JSON-lines manifests: one object per line, blank lines skipped.
std::vector<json> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<json>& records);

void ensure_dir(const std::string& path);

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3 };
void set_log_level(LogLevel level);
LogLevel log_level();

// Structured log line to stderr: {"level":...,"msg":...,...fields}
void log_line(LogLevel level, const std::string& msg, const json& fields = json::object());

}  // namespace scenediff
