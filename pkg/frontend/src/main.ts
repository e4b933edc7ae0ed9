import { ApiClient } from "./api";
import { createApp } from "./app";

const root = document.getElementById("app");
if (root) {
  const app = createApp(root, { api: new ApiClient("") });
  void app.init();
}
