#include "mitl/trace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mitl/error.hpp"

namespace mitl {

TimedTrace::TimedTrace(std::string id, Rational duration, std::vector<Rational> times,
                       std::map<std::string, std::vector<Rational>> columns)
    : id_(std::move(id)), duration_(duration), times_(std::move(times)), columns_(std::move(columns)) {
  if (times_.empty() || times_.front() != Rational(0)) throw Error("trace '" + id_ + "': timestamps must start at 0");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (times_[i] <= times_[i - 1]) throw Error("trace '" + id_ + "': timestamps must be strictly increasing");
  }
  if (times_.back() > duration_) throw Error("trace '" + id_ + "': timestamp beyond duration");
  for (const auto& [name, values] : columns_) {
    if (values.size() != times_.size()) throw Error("trace '" + id_ + "': column '" + name + "' has wrong length");
  }
}

const std::vector<Rational>& TimedTrace::column(const std::string& name) const {
  auto it = columns_.find(name);
  if (it == columns_.end()) throw Error("trace '" + id_ + "' has no signal '" + name + "'");
  return it->second;
}

Rational TimedTrace::value_at(const std::string& name, const Rational& t) const {
  const auto& values = column(name);
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  if (it == times_.begin()) throw Error("time before trace start");
  return values[static_cast<std::size_t>(it - times_.begin() - 1)];
}

TimedTrace TimedTrace::with_id(std::string id) const {
  TimedTrace copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    auto b = cell.find_first_not_of(" \t\r");
    auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TimedTrace read_trace_csv(std::istream& in, std::string id, std::optional<Rational> duration) {
  std::string line;
  if (!std::getline(in, line)) throw Error("trace '" + id + "': empty file");
  std::vector<std::string> header = split_csv(line);
  if (header.empty() || header[0] != "time") throw Error("trace '" + id + "': header must start with 'time'");

  std::vector<Rational> times;
  std::vector<std::vector<Rational>> cols(header.size() - 1);
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> cells = split_csv(line);
    if (cells.size() != header.size())
      throw Error("trace '" + id + "' line " + std::to_string(row) + ": expected " + std::to_string(header.size()) +
                  " fields");
    try {
      times.push_back(Rational::parse(cells[0]));
      for (std::size_t c = 1; c < cells.size(); ++c) cols[c - 1].push_back(Rational::parse(cells[c]));
    } catch (const std::exception& e) {
      throw Error("trace '" + id + "' line " + std::to_string(row) + ": " + e.what());
    }
  }
  if (times.empty()) throw Error("trace '" + id + "': no samples");
  std::map<std::string, std::vector<Rational>> columns;
  for (std::size_t c = 1; c < header.size(); ++c) columns[header[c]] = std::move(cols[c - 1]);
  Rational end = duration.value_or(times.back());
  return TimedTrace(std::move(id), end, std::move(times), std::move(columns));
}

TimedTrace read_trace_file(const std::string& path, std::optional<Rational> duration) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open trace file '" + path + "'");
  return read_trace_csv(in, path, duration);
}

void write_trace_csv(std::ostream& out, const TimedTrace& trace) {
  out << "time";
  for (const auto& [name, _] : trace.columns()) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << trace.times()[i].str();
    for (const auto& [_, values] : trace.columns()) out << ',' << values[i].str();
    out << '\n';
  }
}

}  // namespace mitl
