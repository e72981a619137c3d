/* Embeds nauty's geng generator as a callable function. */
#ifndef PCONN_GENG_BRIDGE_H
#define PCONN_GENG_BRIDGE_H

#ifdef __cplusplus
extern "C" {
#endif

/* Receives one generated graph as a list of m edges (2*m vertex ids). */
typedef void (*pconn_geng_callback)(void* ctx, int n, int m, const int* edges);

/* Runs geng with the given command-line style arguments (argv[0] is the
   program name). Not reentrant: geng keeps global state. Returns geng's
   exit status. */
int pconn_geng_run(int argc, char** argv, pconn_geng_callback cb, void* ctx);

#ifdef __cplusplus
}
#endif

#endif
