import { mountApp } from "./app.js";

const root = document.getElementById("view-root");
if (root) {
  mountApp(root);
}
