#pragma once

// Deterministic report tree shared by the text and structured output modes.
// Both renderings carry identical verdicts and witnesses; the structured form
// is pinned byte-for-byte by golden files.

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace sepcm {

class ReportNode {
 public:
  ReportNode& add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, Entry{value});
    return *this;
  }
  ReportNode& add(const std::string& key, const char* value) {
    return add(key, std::string(value));
  }
  ReportNode& add(const std::string& key, long long value) {
    return add(key, std::to_string(value));
  }
  ReportNode& add(const std::string& key, bool value) {
    return add(key, std::string(value ? "true" : "false"));
  }

  ReportNode& child(const std::string& key) {
    entries_.emplace_back(key, Entry{std::make_shared<ReportNode>()});
    return *std::get<std::shared_ptr<ReportNode>>(entries_.back().second.v);
  }

  /// structured rendering: stable insertion order, two-space indentation
  void render_structured(std::string& out, int depth = 0) const {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    for (const auto& [key, entry] : entries_) {
      if (std::holds_alternative<std::string>(entry.v)) {
        out += pad + key + ": " + std::get<std::string>(entry.v) + "\n";
      } else {
        out += pad + key + ":\n";
        std::get<std::shared_ptr<ReportNode>>(entry.v)->render_structured(out, depth + 1);
      }
    }
  }

  /// text rendering: same data, reads as a log
  void render_text(std::string& out, int depth = 0) const {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    for (const auto& [key, entry] : entries_) {
      if (std::holds_alternative<std::string>(entry.v)) {
        out += pad + key + " = " + std::get<std::string>(entry.v) + "\n";
      } else {
        out += pad + "[" + key + "]\n";
        std::get<std::shared_ptr<ReportNode>>(entry.v)->render_text(out, depth + 1);
      }
    }
  }

  /// flattened key/value pairs ("a.b.c", value) for verdict comparisons
  void flatten(std::vector<std::pair<std::string, std::string>>& out,
               const std::string& prefix = "") const {
    for (const auto& [key, entry] : entries_) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      if (std::holds_alternative<std::string>(entry.v))
        out.emplace_back(path, std::get<std::string>(entry.v));
      else
        std::get<std::shared_ptr<ReportNode>>(entry.v)->flatten(out, path);
    }
  }

  const std::string* find(const std::string& key) const {
    for (const auto& [k, entry] : entries_)
      if (k == key && std::holds_alternative<std::string>(entry.v))
        return &std::get<std::string>(entry.v);
    return nullptr;
  }

  const ReportNode* find_child(const std::string& key) const {
    for (const auto& [k, entry] : entries_)
      if (k == key && std::holds_alternative<std::shared_ptr<ReportNode>>(entry.v))
        return std::get<std::shared_ptr<ReportNode>>(entry.v).get();
    return nullptr;
  }

 private:
  struct Entry {
    std::variant<std::string, std::shared_ptr<ReportNode>> v;
  };
  std::vector<std::pair<std::string, Entry>> entries_;
};

}  // namespace sepcm
