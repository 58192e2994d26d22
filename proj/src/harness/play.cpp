#include "p3/harness/play.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

namespace p3 {
namespace {

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::string format_list(const VertexSet& s) {
  std::string out;
  s.for_each([&](Vertex v) {
    if (!out.empty()) out += " ";
    out += std::to_string(v);
  });
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

}  // namespace

int play_session(const Graph& g, const PlayOptions& options, std::istream& in, std::ostream& out) {
  Engine engine(g, options.variant, options.engine);
  Position pos = Position::start(g, options.variant);
  bool human_to_move = options.human_first;
  bool human_moved_last = false;
  out << "P3-game (" << to_string(options.variant) << ") on " << g.vertex_count() << " vertices; you move "
      << (options.human_first ? "first" : "second") << ".\n";
  while (true) {
    const VertexSet moves = legal_moves(pos);
    if (moves.empty()) break;
    Vertex choice = 0;
    if (human_to_move) {
      while (true) {
        out << "your move> " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
          out << "\nsession closed\n";
          return 0;
        }
        line = trim(line);
        if (line == "quit" || line == "q") {
          out << "bye\n";
          return 0;
        }
        if (line == "moves") {
          out << "legal moves: " << format_list(moves) << "\n";
          continue;
        }
        unsigned long v = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec == std::errc{} && ptr == line.data() + line.size() && v < g.vertex_count() &&
            moves.contains(static_cast<Vertex>(v))) {
          choice = static_cast<Vertex>(v);
          break;
        }
        out << "illegal move '" << line << "'; legal moves: " << format_list(moves) << "\n";
      }
      out << "you label " << choice << "\n";
    } else {
      choice = *engine.best_move(pos.labeled());
      out << "engine labels " << choice << "\n";
    }
    pos = apply_move(pos, choice);
    human_moved_last = human_to_move;
    human_to_move = !human_to_move;
    out << "labeled: " << format_set(pos.labeled()) << "\n";
  }
  out << "no legal moves remain; " << (human_moved_last ? "you win" : "engine wins") << "\n";
  return 0;
}

}  // namespace p3
