/** Shared DOM-test plumbing: shell markup, render polling, fake fetch. */

export function mountShell(): HTMLElement {
  document.body.innerHTML = `
    <header class="app-header">
      <form id="search-form"><input name="q" type="search" /><button type="submit">Search</button></form>
    </header>
    <main id="view-root"></main>
  `;
  window.location.hash = "";
  const root = document.getElementById("view-root");
  if (!root) throw new Error("shell missing #view-root");
  return root;
}

export async function waitFor<T>(probe: () => T | null | undefined, timeoutMs = 5000): Promise<T> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    const value = probe();
    if (value) return value;
    if (Date.now() > deadline) throw new Error("waitFor timed out");
    await new Promise((resolve) => setTimeout(resolve, 25));
  }
}

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export type RouteTable = Record<string, (url: URL) => Response | Promise<Response>>;

/** Install a fetch stub dispatching on pathname; returns the call log. */
export function stubFetch(routes: RouteTable): string[] {
  const calls: string[] = [];
  globalThis.fetch = (async (input: RequestInfo | URL) => {
    const url = new URL(String(input), "http://stub.local");
    calls.push(url.pathname + url.search);
    const handler = routes[url.pathname];
    if (!handler) {
      return jsonResponse({ error: `no stub for ${url.pathname}` }, 404);
    }
    return handler(url);
  }) as typeof fetch;
  return calls;
}
