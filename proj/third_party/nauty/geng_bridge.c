#include "gtools.h"
#include "geng_bridge.h"

int geng_main(int argc, char* argv[]);

static pconn_geng_callback g_callback = 0;
static void* g_context = 0;

void pconn_geng_outproc(FILE* f, graph* g, int n)
{
    int edges[2 * MAXN * MAXN];
    int m = 0;
    int i, j;
    (void)f;
    for (i = 0; i < n; ++i)
        for (j = i + 1; j < n; ++j)
            if (ISELEMENT(GRAPHROW(g, i, 1), j))
            {
                edges[2 * m] = i;
                edges[2 * m + 1] = j;
                ++m;
            }
    g_callback(g_context, n, m, edges);
}

int pconn_geng_run(int argc, char** argv, pconn_geng_callback cb, void* ctx)
{
    int rc;
    g_callback = cb;
    g_context = ctx;
    rc = geng_main(argc, argv);
    g_callback = 0;
    g_context = 0;
    return rc;
}
