#include <httplib.h>

#include <ostream>

#include "cli.hpp"
#include "esgame/service.hpp"

namespace esg {

int run_server(const std::string& host, int port, const std::string& data_dir, std::ostream& log) {
  GameService service(data_dir);
  httplib::Server server;

  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"}});

  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    if (!r.body.empty()) res.set_content(r.body, r.content_type);
  };
  server.Post("/games", forward);
  server.Get(R"(/games/[^/]+)", forward);
  server.Delete(R"(/games/[^/]+)", forward);
  server.Post(R"(/games/[^/]+/moves)", forward);
  server.Get(R"(/games/[^/]+/overlay)", forward);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"ok\":true}", "application/json");
  });

  log << "serving on http://" << host << ":" << port << " (data in " << data_dir << ")\n";
  if (!server.listen(host, port)) {
    log << "cannot listen on " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace esg
